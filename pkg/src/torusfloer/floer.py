"""Heegaard Floer tower decompositions and staircase duality for unit surgeries.

Everything is read off the gap tail counts alpha_i of <p, q>: tower lengths,
gradings, correction terms, Casson invariants.  Each decomposition is built
with its internal consistency conditions enforced, and the two surgeries are
tied together by a sawtooth duality on their tau extrema.
"""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import CoprimePair, alexander, build_semigroup
from .seifert import TauProfile, tau_profile


class CrossCheckError(RuntimeError):
    """Two supposedly independent routes to the same value disagreed."""


@dataclass(frozen=True)
class Tower:
    """One summand T_grading(length)^multiplicity; length None is the infinite tower."""

    grading: int
    length: int | None
    multiplicity: int


@dataclass(frozen=True)
class HFDecomposition:
    """HF^+ of a unit surgery: one infinite tower plus finitely many finite ones.

    rank_reduced is the total length of the finite part, counted with
    multiplicity; casson is the Casson invariant of the same manifold.
    """

    pair: CoprimePair
    surgery: int
    d: int
    towers: tuple[Tower, ...]
    rank_reduced: int
    casson: int


def _canonical(infinite: Tower, finite: list[Tower]) -> tuple[Tower, ...]:
    for t in finite:
        if t.length is None or t.length < 1:
            raise AssertionError("finite towers must have positive length")
    return (infinite,) + tuple(sorted(finite, key=lambda t: (t.grading, t.length)))


def casson_plus_one(pair: CoprimePair) -> int:
    """Casson invariant of +1 surgery, from the centered Alexander expansion."""
    sg = build_semigroup(pair)
    return alexander(sg).second_derivative_centered // 2


def casson_minus_one(pair: CoprimePair) -> int:
    """Casson invariant route for -1 surgery: gap-count form Q(1) - delta(delta-1)/2."""
    sg = build_semigroup(pair)
    return sum(sg.alpha) - sg.delta * (sg.delta - 1) // 2


def hf_plus_one(pair: CoprimePair) -> HFDecomposition:
    """HF^+ of +1 surgery on T(p, q).

    d = -2 alpha_{delta-1}; for k = 0..delta-2 a pair of towers of length
    alpha_{delta+k} sits in grading k(k+1) - 2 alpha_{delta+k}.  The reduced
    rank must match both the Alexander route and the tower lengths.
    """
    sg = build_semigroup(pair)
    dl = sg.delta
    al = sg.alpha
    d = -2 * al[dl - 1]
    finite = [
        Tower(k * (k + 1) - 2 * al[dl + k], al[dl + k], 2) for k in range(dl - 1)
    ]
    casson = casson_plus_one(pair)
    rank = casson - al[dl - 1]
    if rank != sum(t.length * t.multiplicity for t in finite):
        raise CrossCheckError(f"reduced rank mismatch for +1 surgery on {pair}")
    return HFDecomposition(
        pair=pair,
        surgery=+1,
        d=d,
        towers=_canonical(Tower(d, None, 1), finite),
        rank_reduced=rank,
        casson=casson,
    )


def hf_minus_one(pair: CoprimePair) -> HFDecomposition:
    """HF^+ of -1 surgery on T(p, q).

    d = 0; towers of length alpha_{delta+k} in grading (k+1)(k+2) for
    k = 0..delta-2, plus a single extra length-alpha_{delta-1} tower in
    grading 0.  Total finite length must equal the Casson invariant.
    """
    sg = build_semigroup(pair)
    dl = sg.delta
    al = sg.alpha
    finite = [Tower(0, al[dl - 1], 1)]
    finite += [Tower((k + 1) * (k + 2), al[dl + k], 2) for k in range(dl - 1)]
    casson = casson_minus_one(pair)
    rank = casson
    if rank != sum(t.length * t.multiplicity for t in finite):
        raise CrossCheckError(f"reduced rank mismatch for -1 surgery on {pair}")
    if casson != casson_plus_one(pair):
        raise CrossCheckError(f"casson routes disagree for {pair}")
    return HFDecomposition(
        pair=pair,
        surgery=-1,
        d=0,
        towers=_canonical(Tower(0, None, 1), finite),
        rank_reduced=rank,
        casson=casson,
    )


def tau_minus_one_profile(pair: CoprimePair) -> TauProfile:
    """Tau extremum values for -1 surgery; positions are not determined here.

    2*delta minima n(n - 2 delta + 1)/2 interleaved with 2*delta - 1 maxima
    exceeding them by alpha_{2 delta - 2 - n}; the global minimum
    -delta(delta-1)/2 is attained twice, at indices delta - 1 and delta.
    """
    sg = build_semigroup(pair)
    dl = sg.delta
    minima = tuple(n * (n - 2 * dl + 1) // 2 for n in range(2 * dl))
    maxima = tuple(minima[n] + sg.alpha[2 * dl - 2 - n] for n in range(2 * dl - 1))
    gmin_idx = dl - 1
    assert minima[gmin_idx] == minima[dl] == -dl * (dl - 1) // 2
    return TauProfile(
        delta=dl,
        minima_values=minima,
        maxima_values=maxima,
        minima_positions=None,
        maxima_positions=None,
        global_min=minima[gmin_idx],
        global_min_index=gmin_idx,
        global_min_position=None,
    )


@dataclass(frozen=True)
class SawtoothDiagram:
    """Corner values of the zigzag encoding a non-increasing tooth sequence.

    From teeth b_0 >= ... >= b_v >= 1 the path starts at 0, alternately rises
    by b_{v-i} and falls by b_i for i = 0..v, and returns to 0, giving 2v + 3
    corners.  An empty sequence degenerates to the single corner 0.
    """

    teeth: tuple[int, ...]
    corners: tuple[int, ...]


def sawtooth_from_sequence(teeth) -> SawtoothDiagram:
    teeth = tuple(teeth)
    if any(b < 1 for b in teeth):
        raise ValueError("teeth must be positive")
    if any(teeth[i] < teeth[i + 1] for i in range(len(teeth) - 1)):
        raise ValueError("teeth must be non-increasing")
    v = len(teeth) - 1
    corners = [0]
    for i in range(len(teeth)):
        corners.append(corners[-1] + teeth[v - i])
        corners.append(corners[-1] - teeth[i])
    assert corners[-1] == 0
    return SawtoothDiagram(teeth=teeth, corners=tuple(corners))


def _interleaved(profile: TauProfile) -> tuple[int, ...]:
    out = []
    for i, mv in enumerate(profile.minima_values):
        out.append(mv)
        if i < len(profile.maxima_values):
            out.append(profile.maxima_values[i])
    return tuple(out)


@dataclass(frozen=True)
class DualityReport:
    """Matched tau extrema and sawtooth diagrams for both unit surgeries."""

    pair: CoprimePair
    minus_teeth: tuple[int, ...]
    minus_corners: tuple[int, ...]
    plus_teeth: tuple[int, ...]
    plus_corners: tuple[int, ...]


def duality_check(pair: CoprimePair) -> DualityReport:
    """Interleaved tau extrema must trace the sawtooth diagrams of the tail counts.

    -1 surgery uses the full sequence alpha_0..alpha_{2 delta - 2}; +1 surgery
    drops alpha_0.  A mismatch is a hard failure.
    """
    sg = build_semigroup(pair)
    minus_seq = _interleaved(tau_minus_one_profile(pair))
    plus_seq = _interleaved(tau_profile(pair))
    diag_minus = sawtooth_from_sequence(sg.alpha)
    diag_plus = sawtooth_from_sequence(sg.alpha[1:])
    if minus_seq != diag_minus.corners:
        raise CrossCheckError(f"-1 surgery duality failed for {pair}")
    if plus_seq != diag_plus.corners:
        raise CrossCheckError(f"+1 surgery duality failed for {pair}")
    return DualityReport(
        pair=pair,
        minus_teeth=sg.alpha,
        minus_corners=minus_seq,
        plus_teeth=sg.alpha[1:],
        plus_corners=plus_seq,
    )


def grading_identity_holds(pair: CoprimePair) -> bool:
    """Tower gradings against the staircase: k(k+1) - 2 alpha_{delta+k} must
    equal 2 tau(m_{delta-2-k}) + delta(delta-3) for k = -1..delta-2."""
    sg = build_semigroup(pair)
    dl = sg.delta
    prof = tau_profile(pair)
    for k in range(-1, dl - 1):
        lhs = k * (k + 1) - 2 * sg.alpha[dl + k]
        rhs = 2 * prof.minima_values[dl - 2 - k] + dl * (dl - 3)
        if lhs != rhs:
            return False
    return True
