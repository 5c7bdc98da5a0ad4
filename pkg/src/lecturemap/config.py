"""Analysis configuration and the key=value config-file parser."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from .errors import DataError

FEATURE_MODES = ("phrases", "pairs", "g2pairs", "phrases_and_pairs")
COUNT_RULES = ("chapter", "min")


def normalize_mode(mode: str) -> str:
    """Canonicalize a feature-mode name; 'combined' is accepted as an alias."""
    m = mode.strip().lower()
    if m == "combined":
        m = "phrases_and_pairs"
    if m not in FEATURE_MODES:
        raise ValueError(f"unknown feature mode {mode!r}; expected one of {FEATURE_MODES} or 'combined'")
    return m


@dataclass
class Config:
    """Tunable knobs for the whole pipeline, with validated defaults."""

    stem: bool = True
    strip_interior_stopwords: bool = False
    longest_match_only: bool = False
    pair_window: int = 10
    theme_fraction: float = 0.25
    zoom: int = 15
    focus: int = 1
    contrast: int = 1
    mode: str = "phrases_and_pairs"
    count_rule: str = "chapter"
    smooth_counts: bool = False
    g2_threshold: float = 3.841
    t_strong: float = 0.5
    t_weak: float = 0.8
    port: int = 8080
    stopwords_file: str | None = None

    def validate(self) -> "Config":
        if self.pair_window < 1:
            raise DataError(f"pair_window must be >= 1, got {self.pair_window}")
        if not 0.0 < self.theme_fraction <= 1.0:
            raise DataError(f"theme_fraction must be in (0, 1], got {self.theme_fraction}")
        if self.zoom < 1 or self.focus < 1 or self.contrast < 1:
            raise DataError("zoom, focus, and contrast must all be >= 1")
        try:
            self.mode = normalize_mode(self.mode)
        except ValueError as exc:
            raise DataError(str(exc)) from exc
        if self.count_rule not in COUNT_RULES:
            raise DataError(f"count_rule must be one of {COUNT_RULES}, got {self.count_rule!r}")
        if not 0.0 <= self.t_strong <= self.t_weak <= 1.0:
            raise DataError(
                f"similarity thresholds need 0 <= t_strong <= t_weak <= 1, got {self.t_strong}, {self.t_weak}"
            )
        if not 0 < self.port < 65536:
            raise DataError(f"port must be in 1..65535, got {self.port}")
        if self.g2_threshold < 0:
            raise DataError(f"g2_threshold must be >= 0, got {self.g2_threshold}")
        return self


def _coerce(raw: str, target_type: type) -> object:
    raw = raw.strip().strip('"').strip("'")
    if target_type is bool:
        if raw.lower() in ("1", "true", "yes", "on"):
            return True
        if raw.lower() in ("0", "false", "no", "off"):
            return False
        raise DataError(f"expected a boolean, got {raw!r}")
    if target_type is int:
        return int(raw)
    if target_type is float:
        return float(raw)
    return raw


def parse_config_text(text: str) -> Config:
    """Parse simple ``key = value`` lines; '#' starts a comment."""
    known = {f.name: f for f in fields(Config)}
    cfg = Config()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DataError(f"config line {lineno}: expected key=value, got {line!r}")
        key, _, raw = line.partition("=")
        key = key.strip()
        if key not in known:
            raise DataError(f"config line {lineno}: unknown key {key!r}")
        target = known[key].type
        base = int if "int" in str(target) else float if "float" in str(target) else bool if "bool" in str(target) else str
        try:
            setattr(cfg, key, _coerce(raw, base))
        except (ValueError, DataError) as exc:
            raise DataError(f"config line {lineno}: {exc}") from exc
    return cfg.validate()


def load_config(path: "str | Path") -> Config:
    return parse_config_text(Path(path).read_text("utf-8"))
