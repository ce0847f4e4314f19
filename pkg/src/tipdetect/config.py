"""Pipeline configuration and its layered loading.

Precedence, lowest first: built-in defaults, the config file (``--config`` or
the TIPDETECT_CONFIG environment variable), command-line flags.
"""

import configparser
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from src.tipdetect.blob import DEFAULT_CONNECTIVITY
from src.tipdetect.crop import DEFAULT_SLOPE_THRESHOLD, DEFAULT_SLOPE_WINDOW
from src.tipdetect.exceptions import ConfigError
from src.tipdetect.fingertip import TipParams
from src.tipdetect.imaging import DEFAULT_SMOOTH_KERNEL
from src.tipdetect.skin import ColorSpace, SkinThresholds

CONFIG_ENV_VAR = "TIPDETECT_CONFIG"

_SECTION = "tipdetect"

_THRESHOLD_KEYS = (
    "hue_min",
    "hue_max",
    "sat_min",
    "sat_max",
    "cb_min",
    "cb_max",
    "cr_min",
    "cr_max",
)
_INT_KEYS = ("smooth_kernel", "connectivity", "slope_window", "tip_diff", "tip_min_run")
_RUN_KEYS = ("jobs", "png")
KNOWN_KEYS = frozenset(
    (
        "color_space",
        *_THRESHOLD_KEYS,
        *_INT_KEYS,
        "slope_threshold",
        "tip_max",
        "crop",
        *_RUN_KEYS,
    )
)


@dataclass(frozen=True)
class PipelineConfig:
    """Every tunable of the per-frame pipeline.

    Attributes
    ----------
    thresholds : SkinThresholds
        Skin chroma bands and colour space.
    smooth_kernel : int
        Odd width of the majority-vote filter.
    connectivity : int
        4 or 8, for largest-blob selection.
    slope_threshold : float
        Wrist inclination threshold at 640x480, scaled with frame size.
    slope_window : int
        Scanlines the inclination is measured over.
    tip_params : TipParams
        Fingertip grouping thresholds at the reference hand extent.
    crop_enabled : bool
        Run the crop stage; off gives the uncropped A/B baseline.
    """

    thresholds: SkinThresholds = field(default_factory=SkinThresholds)
    smooth_kernel: int = DEFAULT_SMOOTH_KERNEL
    connectivity: int = DEFAULT_CONNECTIVITY
    slope_threshold: float = DEFAULT_SLOPE_THRESHOLD
    slope_window: int = DEFAULT_SLOPE_WINDOW
    tip_params: TipParams = field(default_factory=TipParams)
    crop_enabled: bool = True

    def validate(self) -> None:
        """Raise ConfigError if any component invariant is violated."""
        self.thresholds.validate()
        self.tip_params.validate()
        if self.smooth_kernel < 1 or self.smooth_kernel % 2 == 0:
            raise ConfigError(
                f"smooth_kernel must be odd and >= 1, got {self.smooth_kernel}"
            )
        if self.connectivity not in (4, 8):
            raise ConfigError(f"connectivity must be 4 or 8, got {self.connectivity}")
        if self.slope_threshold <= 0:
            raise ConfigError(
                f"slope_threshold must be > 0, got {self.slope_threshold}"
            )
        if self.slope_window < 1:
            raise ConfigError(f"slope_window must be >= 1, got {self.slope_window}")

    def with_overrides(self, **changes: Any) -> "PipelineConfig":
        """Copy with some fields replaced, validated."""
        updated = replace(self, **changes)
        updated.validate()
        return updated


@dataclass(frozen=True)
class RunOptions:
    """Settings of a CLI run that never change per-frame results."""

    jobs: int = 1
    png: bool = False


def _parse_bool(key: str, value: str) -> bool:
    normalized = value.strip().lower()
    if normalized in {"1", "true", "t", "yes", "y", "on"}:
        return True
    if normalized in {"0", "false", "f", "no", "n", "off"}:
        return False
    raise ConfigError(f"{key}: expected a boolean, got {value!r}")


def load_config_file(path: str | Path) -> dict[str, str]:
    """Read a flat ``key = value`` config file.

    Lines starting with ``#`` and blank lines are ignored.

    Raises
    ------
    ConfigError
        If the file cannot be read, is malformed or names an unknown key.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"Cannot read config file {path}: {exc}") from exc

    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#",))
    try:
        parser.read_string(f"[{_SECTION}]\n{text}", source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"Malformed config file {path}: {exc}") from exc

    values = dict(parser[_SECTION])
    unknown = sorted(set(values) - KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"Unknown config keys in {path}: {', '.join(unknown)}")
    return values


def _coerce(key: str, value: Any) -> Any:
    if not isinstance(value, str):
        return value
    try:
        if key in _THRESHOLD_KEYS or key == "slope_threshold":
            return float(value)
        if key in _INT_KEYS or key == "jobs":
            return int(value)
        if key == "tip_max":
            return None if value.strip().lower() in {"", "none"} else int(value)
    except ValueError as exc:
        raise ConfigError(f"{key}: cannot parse {value!r}") from exc
    if key in ("crop", "png"):
        return _parse_bool(key, value)
    if key == "color_space":
        try:
            return ColorSpace(value.strip().lower())
        except ValueError as exc:
            raise ConfigError(
                f"color_space must be hsv or ycbcr, got {value!r}"
            ) from exc
    return value


def build_config(values: dict[str, Any]) -> tuple[PipelineConfig, RunOptions]:
    """Build validated configs from flat key/value pairs over the defaults.

    Raises
    ------
    ConfigError
        On unparseable values or violated invariants.
    """
    flat = {
        key: _coerce(key, value) for key, value in values.items() if value is not None
    }

    defaults = PipelineConfig()
    thresholds = replace(
        defaults.thresholds,
        **{key: flat[key] for key in _THRESHOLD_KEYS if key in flat},
        **({"color_space": flat["color_space"]} if "color_space" in flat else {}),
    )
    tip_params = TipParams(
        diff_threshold=flat.get("tip_diff", defaults.tip_params.diff_threshold),
        min_run=flat.get("tip_min_run", defaults.tip_params.min_run),
        max_tips=flat.get("tip_max", defaults.tip_params.max_tips),
    )
    config = PipelineConfig(
        thresholds=thresholds,
        smooth_kernel=flat.get("smooth_kernel", defaults.smooth_kernel),
        connectivity=flat.get("connectivity", defaults.connectivity),
        slope_threshold=flat.get("slope_threshold", defaults.slope_threshold),
        slope_window=flat.get("slope_window", defaults.slope_window),
        tip_params=tip_params,
        crop_enabled=flat.get("crop", defaults.crop_enabled),
    )
    config.validate()

    options = RunOptions(jobs=flat.get("jobs", 1), png=flat.get("png", False))
    if options.jobs < 1:
        raise ConfigError(f"jobs must be >= 1, got {options.jobs}")
    return config, options


def resolve_config(
    config_path: str | Path | None,
    cli_values: dict[str, Any],
) -> tuple[PipelineConfig, RunOptions]:
    """Layer defaults, config file and CLI values into validated configs.

    Parameters
    ----------
    config_path : str | Path | None
        Explicit config file; falls back to the TIPDETECT_CONFIG variable.
    cli_values : dict[str, Any]
        Flag values keyed like the config file; None means "not given".
    """
    path = config_path or os.environ.get(CONFIG_ENV_VAR)
    values: dict[str, Any] = dict(load_config_file(path)) if path else {}
    values.update({key: val for key, val in cli_values.items() if val is not None})
    return build_config(values)
