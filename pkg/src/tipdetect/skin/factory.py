"""Factory for creating skin classifiers based on colour space."""

from collections.abc import Callable

from src.tipdetect.exceptions import TipDetectError
from src.tipdetect.protocols import SkinClassifier
from src.tipdetect.skin.hsv import HsvSkinClassifier
from src.tipdetect.skin.thresholds import ColorSpace, SkinThresholds
from src.tipdetect.skin.ycbcr import YCbCrSkinClassifier


class ClassifierNotFoundError(TipDetectError):
    """Raised when no classifier exists for a colour space."""

    pass


class ClassifierFactory:
    """Factory for creating per-pixel skin classifiers.

    Uses a registry mapping colour space to classifier constructor, so new
    skin models can be plugged in without touching the filter.

    Examples
    --------
    >>> classifier = ClassifierFactory.create(SkinThresholds())
    >>> mask = classifier.mask(frame.data)
    """

    _registry: dict[ColorSpace, Callable[[SkinThresholds], SkinClassifier]] = {
        ColorSpace.HSV: HsvSkinClassifier,
        ColorSpace.YCBCR: YCbCrSkinClassifier,
    }

    @classmethod
    def create(cls, thresholds: SkinThresholds) -> SkinClassifier:
        """Create the classifier for ``thresholds.color_space``.

        Raises
        ------
        ClassifierNotFoundError
            If no classifier is registered for the colour space.
        """

        if thresholds.color_space not in cls._registry:
            raise ClassifierNotFoundError(
                f"No skin classifier registered for {thresholds.color_space}. "
                f"Available: {[space.value for space in cls._registry]}"
            )

        return cls._registry[thresholds.color_space](thresholds)

    @classmethod
    def register(
        cls,
        color_space: ColorSpace,
        classifier: Callable[[SkinThresholds], SkinClassifier],
    ) -> None:
        """Register a classifier constructor for a colour space."""
        cls._registry[color_space] = classifier
