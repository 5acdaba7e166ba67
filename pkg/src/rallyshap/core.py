"""Turn-based rally domain model: strokes, rallies, validation, imputation.

Stroke indices are 1-based throughout (stroke 1 is the serve), matching the
usual rally notation; the underlying containers are ordinary 0-based tuples.
Every type is an immutable value and every operation returns a fresh rally,
so instances can be shared freely across threads and processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum, IntEnum
from typing import Iterable

MAX_RALLY_LENGTH = 35


class ShotType(IntEnum):
    """Ten-shot vocabulary with stable wire codes 0-9."""

    CLEAR = 0
    NET_SHOT = 1
    SMASH = 2
    PUSH_RUSH = 3
    DROP = 4
    DRIVE = 5
    LOB = 6
    DEFENSIVE_SHOT = 7
    SHORT_SERVICE = 8
    LONG_SERVICE = 9

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def from_label(cls, label: str) -> "ShotType":
        try:
            return cls[label.upper()]
        except KeyError:
            raise ValueError(f"unknown shot type {label!r}") from None


N_SHOT_TYPES = len(ShotType)
SERVICE_SHOTS = frozenset({ShotType.SHORT_SERVICE, ShotType.LONG_SERVICE})


class PlayerRole(Enum):
    """Positional role within a rally; A is whoever serves stroke 1."""

    A = "A"
    B = "B"

    @property
    def opponent(self) -> "PlayerRole":
        return PlayerRole.B if self is PlayerRole.A else PlayerRole.A


def role_for_index(index: int) -> PlayerRole:
    """Role owning the 1-based stroke index: the server hits every odd stroke."""
    return PlayerRole.A if index % 2 == 1 else PlayerRole.B


@dataclass(frozen=True)
class Coord:
    """Landing point in the opponent half-court.

    x spans [-0.5, 0.5] across the court width, y spans [0, 1] from the net
    (y=0) to the baseline (y=1), both as fractions of the half-court.
    """

    x: float
    y: float

    def in_court(self) -> bool:
        return (
            math.isfinite(self.x)
            and math.isfinite(self.y)
            and -0.5 <= self.x <= 0.5
            and 0.0 <= self.y <= 1.0
        )


@dataclass(frozen=True)
class Stroke:
    role: PlayerRole
    player_id: str
    shot: ShotType
    area: Coord


# Imputation baseline: a defensive return to the middle of the half-court.
REFERENCE_SHOT = ShotType.DEFENSIVE_SHOT
REFERENCE_AREA = Coord(0.0, 0.5)


def reference_stroke(role: PlayerRole, player_id: str) -> Stroke:
    """Baseline stroke substituted for dropped features."""
    return Stroke(role, player_id, REFERENCE_SHOT, REFERENCE_AREA)


@dataclass(frozen=True)
class Rally:
    """One rally: ``player_a`` serves stroke 1 and roles alternate strictly.

    ``tau`` is the given-stroke count that splits observed context from the
    strokes to forecast. Dataset files carry no tau, so it stays ``None``
    until assigned via :meth:`with_tau`; operations that need it raise when
    it is unset.
    """

    id: str
    player_a: str
    player_b: str
    strokes: tuple[Stroke, ...]
    tau: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "strokes", tuple(self.strokes))

    def __len__(self) -> int:
        return len(self.strokes)

    def stroke(self, index: int) -> Stroke:
        """1-based stroke access."""
        if not 1 <= index <= len(self.strokes):
            raise IndexError(f"stroke index {index} outside 1..{len(self.strokes)}")
        return self.strokes[index - 1]

    def player_for(self, role: PlayerRole) -> str:
        return self.player_a if role is PlayerRole.A else self.player_b

    def opponent_of(self, role: PlayerRole) -> str:
        return self.player_b if role is PlayerRole.A else self.player_a

    def with_tau(self, tau: int) -> "Rally":
        if not 2 <= tau <= len(self.strokes) - 1:
            raise ValueError(
                f"tau={tau} invalid for rally {self.id!r} of length {len(self.strokes)}"
            )
        return replace(self, tau=tau)

    def require_tau(self) -> int:
        if self.tau is None:
            raise ValueError(f"rally {self.id!r} has no given-stroke count set")
        return self.tau


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_rally(rally: Rally) -> ValidationReport:
    """Report every violated rally invariant; violations are data, not errors."""
    violations: list[str] = []
    n = len(rally.strokes)

    if n < 2:
        violations.append(f"length: rally has {n} strokes, minimum is 2")
    if n > MAX_RALLY_LENGTH:
        violations.append(f"length: rally has {n} strokes, maximum is {MAX_RALLY_LENGTH}")

    if n >= 1 and rally.strokes[0].shot not in SERVICE_SHOTS:
        violations.append(
            f"serve type: stroke 1 is {rally.strokes[0].shot.label}, "
            "expected short_service or long_service"
        )

    for i, stroke in enumerate(rally.strokes, start=1):
        expected = role_for_index(i)
        if stroke.role is not expected:
            violations.append(
                f"alternation: stroke {i} has role {stroke.role.value}, expected {expected.value}"
            )
        if not stroke.area.in_court():
            violations.append(
                f"coordinates: stroke {i} lands at ({stroke.area.x}, {stroke.area.y}), "
                "outside x in [-0.5, 0.5], y in [0, 1]"
            )

    if rally.tau is not None and not 2 <= rally.tau <= n - 1:
        violations.append(f"tau: {rally.tau} outside [2, {n - 1}]")

    return ValidationReport(tuple(violations))


def impute_past(rally: Rally, keep: Iterable[int]) -> Rally:
    """Replace the content of given strokes 2..tau that are not in ``keep``.

    Kept strokes and the serve are untouched; replaced strokes keep their
    role and player id but take the reference shot and area. The input rally
    is never modified.
    """
    tau = rally.require_tau()
    keep_set = frozenset(keep)
    allowed = range(2, tau + 1)
    bad = sorted(i for i in keep_set if i not in allowed)
    if bad:
        raise ValueError(f"keep indices {bad} outside imputable range 2..{tau}")

    strokes = list(rally.strokes)
    for i in allowed:
        if i not in keep_set:
            old = strokes[i - 1]
            strokes[i - 1] = Stroke(old.role, old.player_id, REFERENCE_SHOT, REFERENCE_AREA)
    return replace(rally, strokes=tuple(strokes))


def impute_player(rally: Rally, target: PlayerRole, horizon: int) -> Rally:
    """Turn ``target`` into a static opponent over strokes 2..horizon.

    Every stroke owned by the target (index >= 3 odd for A, index >= 2 even
    for B, up to ``horizon``) has its player id flipped to the opponent's.
    Strokes at or before the rally's tau additionally have their content
    replaced by the reference stroke; later strokes keep their content since
    only identity conditioning reaches the forecaster there. The serve is
    always untouched.
    """
    n = len(rally.strokes)
    if horizon > n:
        raise ValueError(f"horizon {horizon} exceeds rally length {n}")
    tau = rally.require_tau()
    opponent_id = rally.opponent_of(target)
    start = 3 if target is PlayerRole.A else 2

    strokes = list(rally.strokes)
    for i in range(start, horizon + 1, 2):
        old = strokes[i - 1]
        if i <= tau:
            strokes[i - 1] = Stroke(old.role, opponent_id, REFERENCE_SHOT, REFERENCE_AREA)
        else:
            strokes[i - 1] = Stroke(old.role, opponent_id, old.shot, old.area)
    return replace(rally, strokes=tuple(strokes))
