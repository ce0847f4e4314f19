"""Connected-component labelling and largest-BLOB selection.

The biggest connected group of skin pixels is taken as the hand; every other
group is treated as skin-coloured background noise.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy import ndimage

from src.tipdetect.exceptions import ConfigError, NoForegroundError
from src.tipdetect.imaging import BinarySilhouette

DEFAULT_CONNECTIVITY = 8

_STRUCTURES = {
    4: ndimage.generate_binary_structure(2, 1),
    8: ndimage.generate_binary_structure(2, 2),
}


@dataclass(frozen=True, eq=False)
class ComponentLabels:
    """Dense component labelling of a silhouette.

    Attributes
    ----------
    labels : NDArray[np.int32]
        Row-major labels, 0 for background and 1..L for components.
    component_sizes : dict[int, int]
        Pixel count of every label 1..L.
    """

    labels: NDArray[np.int32]
    component_sizes: dict[int, int]

    @property
    def count(self) -> int:
        return len(self.component_sizes)

    @property
    def height(self) -> int:
        return int(self.labels.shape[0])

    @property
    def width(self) -> int:
        return int(self.labels.shape[1])


def _structure(connectivity: int) -> NDArray[np.bool_]:
    if connectivity not in _STRUCTURES:
        raise ConfigError(f"Connectivity must be 4 or 8, got {connectivity}")
    return _STRUCTURES[connectivity]


def connected_components(
    sil: BinarySilhouette, connectivity: int = DEFAULT_CONNECTIVITY
) -> ComponentLabels:
    """Label the connected components of a silhouette.

    Parameters
    ----------
    sil : BinarySilhouette
        Input silhouette.
    connectivity : int, default 8
        4 (edge neighbours) or 8 (edge and corner neighbours).

    Returns
    -------
    ComponentLabels
        Dense labels 1..L; an empty silhouette yields L = 0.
    """
    labels, n_labels = ndimage.label(sil.bits, structure=_structure(connectivity))
    sizes = np.bincount(labels.ravel(), minlength=n_labels + 1)[1:]
    component_sizes = {label: int(size) for label, size in enumerate(sizes, start=1)}
    return ComponentLabels(labels.astype(np.int32), component_sizes)


def largest_blob(
    sil: BinarySilhouette, connectivity: int = DEFAULT_CONNECTIVITY
) -> BinarySilhouette:
    """Keep only the largest connected component.

    Ties on size go to the component whose first pixel in row-major order
    (smallest row, then column) comes first.

    Raises
    ------
    NoForegroundError
        If the silhouette has no on-pixel.
    """
    components = connected_components(sil, connectivity)
    if components.count == 0:
        raise NoForegroundError("Silhouette has no on-pixels; no hand in frame")

    biggest = max(components.component_sizes.values())
    sizes = components.component_sizes
    tied = [label for label, size in sizes.items() if size == biggest]
    if len(tied) == 1:
        keep = tied[0]
    else:
        flat = components.labels.ravel()
        keep = min(tied, key=lambda label: int(np.argmax(flat == label)))

    return BinarySilhouette.from_mask(components.labels == keep)
