"""Gazetteer augmentation and locality-window disambiguation."""

from .augment import AugmentedToken, Resolution, augment, join_token, probe_tokens
from .resolver import (
    ResolutionOutcome,
    ResolvedPlace,
    disambiguate,
    resolve_countries,
    window_context,
)

__all__ = [
    "AugmentedToken",
    "Resolution",
    "augment",
    "join_token",
    "probe_tokens",
    "ResolutionOutcome",
    "ResolvedPlace",
    "disambiguate",
    "resolve_countries",
    "window_context",
]
