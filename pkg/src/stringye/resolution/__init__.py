from stringye.resolution.data import Component, ResolutionData, ResolutionMode, StrataKind
from stringye.resolution.stringy import (
    ProjectiveReport,
    closed_from_open,
    exceptional_contribution,
    open_from_closed,
    stringy_euler,
    stringy_euler_direct,
    stringy_from_closed,
    stringy_from_open,
    stringy_value,
    verify_projective_properties,
)

__all__ = [
    "Component",
    "ProjectiveReport",
    "ResolutionData",
    "ResolutionMode",
    "StrataKind",
    "closed_from_open",
    "exceptional_contribution",
    "open_from_closed",
    "stringy_euler",
    "stringy_euler_direct",
    "stringy_from_closed",
    "stringy_from_open",
    "stringy_value",
    "verify_projective_properties",
]
