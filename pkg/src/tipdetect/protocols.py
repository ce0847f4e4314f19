"""Protocol definitions for tipdetect."""

from typing import Protocol

import numpy as np
from numpy.typing import NDArray


class SkinClassifier(Protocol):
    """Protocol for per-pixel skin classifiers used by the skin filter."""

    def mask(self, data: NDArray[np.uint8]) -> NDArray[np.bool_]: ...
