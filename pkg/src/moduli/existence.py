"""
Existence of stable sheaves with a given Mukai vector on an Enriques surface.

For r > 0 (and for r = 0 with (L, H) > 0) and primitive v = (r, L, s/2),
M_H(v) is non-empty for general H exactly when one of the following holds:

    (i)   gcd(r, L, s) = 1 and (L^2) - rs >= -1
    (ii)  gcd(r, L, s) = 2 and (L^2) - rs >= 2
    (iii) gcd(r, L, s) = 2, (L^2) - rs = 0 and L = (r/2) K_X mod 2
    (iv)  (L^2) - rs = -2 and L = D + (r/2) K_X mod 2 for a nodal cycle D
"""
from typing import NamedTuple

import structlog

from src.errors import BoundTooLarge, SearchBoundExceeded
from src.lattice.classes import NSClass, pair
from src.moduli.verdict import Procedure, Verdict, VerdictCase
from src.mukai.divisibility import Divisibility, congruent_mod2, gcd_divisibility
from src.mukai.vector import MukaiVector, self_pairing
from src.surface.model import SurfaceModel
from src.surface.nodal import find_nodal_cycle_mod2, is_nodal_cycle

logger = structlog.get_logger("enriques.moduli.existence")


class DimensionBounds(NamedTuple):
    lower: int
    expected: int


def dimension_bounds(v: MukaiVector) -> DimensionBounds:
    """
    dim M_H(v) >= (L^2) - rs + 1; the expected value is clamped at 0.

    Exact for odd rank. Case (iii) moduli are surfaces (dimension 2), which the
    verdict reports instead.
    """
    lower = self_pairing(v) + 1
    return DimensionBounds(lower=lower, expected=max(lower, 0))


def _dimension(v: MukaiVector, case: VerdictCase, q: int) -> tuple[int, bool, list[str]]:
    """Dimension of a non-empty moduli space, whether it is proved, and caveats."""
    if case is VerdictCase.III:
        return 2, True, []
    if q < 0:
        # Spherical vectors give a rigid point; <v^2> = -1 gives <v^2> + 1 = 0.
        return 0, True, []
    expected = dimension_bounds(v).expected
    if v.rank % 2:
        return expected, True, []
    return expected, False, [
        f"dimension {expected} is the lower bound <v^2> + 1; smoothness is proved for odd rank only"
    ]


def _nodal_targets(model: SurfaceModel, v: MukaiVector) -> list[tuple[NSClass, str]]:
    """Classes L - (r/2) K_X to match against nodal cycles modulo 2."""
    if v.rank % 2 == 0:
        return [(v.c1 + (v.rank // 2) * model.canonical, "L = D + (r/2)K_X mod 2")]
    targets = [(v.c1, "odd rank: matched L = D mod 2")]
    if model.classical:
        targets.append((v.c1 + model.canonical, "odd rank: matched L = D + K_X mod 2"))
    return targets


def _search_nodal(
    model: SurfaceModel, targets: list[tuple[NSClass, str]]
) -> tuple[NSClass | None, list[str], bool]:
    """Return (witness, notes, exhausted)."""
    for target, label in targets:
        try:
            witness = find_nodal_cycle_mod2(model, target)
        except (SearchBoundExceeded, BoundTooLarge) as exc:
            return None, [f"nodal cycle search exhausted: {exc}"], True
        if witness is not None:
            return witness, [label] if label.startswith("odd") else [], False
    return None, [f"no nodal cycle with coefficients <= {model.coeff_bound} matches"], False


def _four_cases(
    model: SurfaceModel,
    v: MukaiVector,
    q: int,
    divisibility: Divisibility,
    procedure: Procedure,
) -> Verdict:
    base = dict(procedure=procedure, self_pairing=q, divisibility=divisibility)
    g = divisibility.g_rs
    case: VerdictCase | None = None
    witness: NSClass | None = None
    notes: list[str] = []

    if q < -2:
        return Verdict(nonempty=False, notes=("<v^2> < -2: no stable sheaf exists",), **base)

    if g == 1 and q >= -1:
        case = VerdictCase.I
    elif g == 2 and q >= 2:
        case = VerdictCase.II
    elif g == 2 and q == 0:
        twisted = (v.rank // 2) * model.canonical
        if congruent_mod2(v.c1, twisted, classical=model.classical):
            case = VerdictCase.III
        else:
            notes.append("gcd 2 and <v^2> = 0 but L is not (r/2)K_X mod 2")
    elif q == -2:
        witness, search_notes, exhausted = _search_nodal(model, _nodal_targets(model, v))
        notes.extend(search_notes)
        if exhausted:
            return Verdict(nonempty=None, notes=tuple(notes), **base)
        if witness is not None:
            case = VerdictCase.IV

    if case is None:
        return Verdict(nonempty=False, notes=tuple(notes), **base)

    dimension, proved, dimension_notes = _dimension(v, case, q)
    return Verdict(
        nonempty=True,
        case=case,
        witness=witness,
        dimension=dimension,
        dimension_proved=proved,
        notes=tuple(notes + dimension_notes),
        **base,
    )


def _inapplicable(procedure: Procedure, reason: str, **fields) -> Verdict:
    return Verdict(
        nonempty=None, procedure=procedure, case=VerdictCase.INAPPLICABLE, notes=(reason,), **fields
    )


def decide_existence(model: SurfaceModel, v: MukaiVector) -> Verdict:
    """
    Decide M_H(v) != empty for a positive-rank Mukai vector.

    Non-primitive vectors are reported as inapplicable. A search that runs out
    of bounds gives an unknown verdict carrying the caveat in ``notes``.
    """
    v = model.collapse_vector(v).check_parity()
    if v.rank <= 0:
        raise ValueError(f"decide_existence needs r > 0, got r = {v.rank}")

    divisibility = gcd_divisibility(v)
    q = self_pairing(v)
    if divisibility.g_primitive != 1:
        return _inapplicable(
            Procedure.EXISTENCE,
            f"v is not primitive (gcd(r, L, (r+s)/2) = {divisibility.g_primitive})",
            self_pairing=q,
            divisibility=divisibility,
        )

    verdict = _four_cases(model, v, q, divisibility, Procedure.EXISTENCE)
    logger.debug("Existence verdict", v=str(v), nonempty=verdict.nonempty, case=verdict.case)
    return verdict


def decide_rank0(model: SurfaceModel, v: MukaiVector) -> Verdict:
    """
    The same criterion for r = 0, valid when (L, H) > 0.

    Returns an inapplicable verdict when (L, H) <= 0 or v is not primitive.
    """
    v = model.collapse_vector(v).check_parity()
    if v.rank != 0:
        raise ValueError(f"decide_rank0 needs r = 0, got r = {v.rank}")

    degree = pair(v.c1, model.ample)
    if degree <= 0:
        return _inapplicable(Procedure.RANK0, f"(L, H) = {degree} is not positive")

    divisibility = gcd_divisibility(v)
    q = self_pairing(v)
    if divisibility.g_primitive != 1:
        return _inapplicable(
            Procedure.RANK0,
            f"v is not primitive (gcd(r, L, (r+s)/2) = {divisibility.g_primitive})",
            self_pairing=q,
            divisibility=divisibility,
        )
    return _four_cases(model, v, q, divisibility, Procedure.RANK0)


def decide_spherical_rank2(model: SurfaceModel, v: MukaiVector) -> Verdict:
    """
    Rank-two spherical vectors: v = (2, L, s/2) with (L^2) - 2s = -2 is realised
    by a stable sheaf exactly when L = D + K_X mod 2 for a nodal cycle D.
    """
    v = model.collapse_vector(v).check_parity()
    q = self_pairing(v)
    if v.rank != 2 or q != -2:
        raise ValueError(f"decide_spherical_rank2 needs r = 2 and <v^2> = -2, got {v}")

    base = dict(procedure=Procedure.SPHERICAL_RANK2, self_pairing=q)
    try:
        witness = find_nodal_cycle_mod2(model, v.c1 + model.canonical)
    except (SearchBoundExceeded, BoundTooLarge) as exc:
        return Verdict(nonempty=None, notes=(f"nodal cycle search exhausted: {exc}",), **base)

    if witness is None:
        return Verdict(
            nonempty=False,
            notes=(f"no nodal cycle with coefficients <= {model.coeff_bound} matches",),
            **base,
        )
    return Verdict(
        nonempty=True,
        case=VerdictCase.SPHERICAL_RANK2,
        witness=witness,
        dimension=0,
        dimension_proved=True,
        **base,
    )


def decide(model: SurfaceModel, v: MukaiVector, spherical: bool = False) -> Verdict:
    """
    Route a query to the matching procedure.

    Rank 0 goes to the torsion-sheaf criterion; with ``spherical`` a rank-two
    vector of square -2 goes to the rank-two criterion.
    """
    if v.rank < 0:
        raise ValueError(f"rank must be non-negative, got {v.rank}")
    if v.rank == 0:
        verdict = decide_rank0(model, v)
    elif spherical and v.rank == 2 and self_pairing(v) == -2:
        verdict = decide_spherical_rank2(model, v)
    else:
        verdict = decide_existence(model, v)

    if verdict.nonempty and verdict.witness is not None and not is_nodal_cycle(model, verdict.witness):
        raise AssertionError(f"witness {verdict.witness} is not a nodal cycle")
    return verdict
