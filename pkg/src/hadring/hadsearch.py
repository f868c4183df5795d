"""Weight-restricted exhaustive search for circulant Hadamard sequences.

A length-4m² sequence with vanishing off-peak autocorrelation must have
weight 2m² - m or 2m² + m, and each admissible weight splits across the two
halves of the sequence in a narrow range of ways.  The driver enumerates
exactly those (first half, second half) weight pairs: the first half walks
its weight class in colex rank order, the second half is precomputed per
split, and every assembled candidate passes a cheap half-shift popcount
filter before the full all-shifts check runs.

Progress is a single integer (completed first-half steps, counted across the
whole plan in a fixed order), which makes chunking, windows, checkpointing
and resumption compositions of rank arithmetic.
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass, replace
from multiprocessing import Pool

from .correlation import autocorrelation_vector
from .errors import InputError, InvariantViolation
from .seqcore import (
    BitSequence,
    _mask,
    _rotate,
    format_sequence,
    iter_weight_class_bits,
    negate,
    orbit_of,
    plus_support,
)


def _is_ch_bits(bits: int, n: int) -> bool:
    """All-shift autocorrelation test on packed bits, early exit, half range."""
    mask = _mask(n)
    for k in range(1, n // 2 + 1):
        agree = ~(bits ^ _rotate(bits, n, k)) & mask
        if 2 * agree.bit_count() != n:
            return False
    return True


def is_circulant_hadamard(x: BitSequence) -> bool:
    """True when every off-peak periodic autocorrelation of ``x`` vanishes."""
    return _is_ch_bits(x.bits, x.n)


def _check_m(m: int, allow_even: bool = False) -> None:
    if m < 1:
        raise InputError(f"m must be a positive integer, got {m}")
    if m % 2 == 0 and not allow_even:
        raise InputError(f"m must be odd (got {m}); even m is outside the admissible theory")


def admissible_weights(m: int) -> set:
    """The only weights a circulant Hadamard sequence of length 4m² can have."""
    _check_m(m)
    return {2 * m * m - m, 2 * m * m + m}


@dataclass(frozen=True)
class SplitConstraint:
    """First-half weight ``a`` and second-half weight ``b`` for one scan lane."""

    a: int
    b: int
    family: str  # "minus" for total weight 2m²-m, "plus" for 2m²+m


def _split_range(m: int) -> range:
    lo = (m * m - m) // 2
    hi = (3 * m * m - m) // 2
    return range(lo, hi + 1)


def admissible_splits(m: int, sign: str = "minus") -> tuple[SplitConstraint, ...]:
    """Half-weight pairs compatible with the admissible total weights.

    The minus family pairs a with 2m² - m - a; the plus family pairs a with
    m + a.  In both cases a runs over [(m² - m)/2, (3m² - m)/2] and both
    halves stay within [0, 2m²].
    """
    _check_m(m)
    if sign not in ("minus", "plus"):
        raise InputError(f"sign must be 'minus' or 'plus', got {sign!r}")
    half = 2 * m * m
    out = []
    for a in _split_range(m):
        b = (half - m - a) if sign == "minus" else (m + a)
        if not (0 <= a <= half and 0 <= b <= half):
            raise InvariantViolation(f"split ({a},{b}) escaped [0,{half}] at m={m}")
        out.append(SplitConstraint(a, b, sign))
    return tuple(out)


def _scan_splits(m: int, sign: str) -> tuple[SplitConstraint, ...]:
    """Splits the driver actually walks for one family.

    The minus lanes are the admissible ones.  The plus lanes are obtained by
    negating the minus lanes (complementing both half weights), which keeps
    every plus-family total weight at 2m² + m; they are returned sorted by
    first-half weight so the scan order is deterministic.
    """
    half = 2 * m * m
    if sign == "minus":
        return tuple(SplitConstraint(a, half - m - a, "minus") for a in _split_range(m))
    lanes = [SplitConstraint(half - a, m + a, "plus") for a in _split_range(m)]
    lanes.sort(key=lambda s: (s.a, s.b))
    return tuple(lanes)


@dataclass(frozen=True)
class HalfShiftWitness:
    """Evidence that a half-length shift rules a sequence out."""

    n: int
    shift: int
    product_weight: int
    excluded: bool


def half_shift_exclusion(x: BitSequence) -> HalfShiftWitness:
    """Witness that an even-weight sequence fails the half-length shift test.

    At length 4m² with m odd, the pointwise product of an even-weight
    sequence with its half-length shift never has weight exactly 2m², so the
    autocorrelation at that shift cannot vanish.  Seeing weight 2m² anyway
    raises InvariantViolation.
    """
    n = x.n
    m2 = n // 4
    m = math.isqrt(m2)
    if n % 4 or m * m != m2 or m < 1:
        raise InputError(f"length {n} is not 4m² for a positive integer m")
    if m % 2 == 0:
        raise InputError(f"the half-shift exclusion needs odd m, got m={m}")
    if x.bits.bit_count() % 2:
        raise InputError(f"sequence weight must be even, got {x.bits.bit_count()}")
    shift = n // 2
    agree = ~(x.bits ^ _rotate(x.bits, n, shift)) & _mask(n)
    w = agree.bit_count()
    if w == shift:
        raise InvariantViolation(
            f"half-shift product weight hit {shift} for even-weight {x}"
        )
    return HalfShiftWitness(n=n, shift=shift, product_weight=w, excluded=True)


@dataclass(frozen=True)
class SearchConfig:
    """Everything that determines one search job's scan set.

    ``chunk`` = (index, count) splits the global progress range into ``count``
    near-equal windows and scans the ``index``-th.  ``b_window`` further
    clips the scan to a [start, stop) range of global first-half steps.
    ``splits`` optionally restricts to the listed (a, b) half-weight pairs.
    With ``mirror_minus`` the plus family is not scanned at all; its results
    are derived by negating the minus-family findings.
    """

    m: int
    sign: str = "both"
    chunk: tuple = (0, 1)
    splits: tuple | None = None
    b_window: tuple | None = None
    use_half_shift_filter: bool = True
    mirror_minus: bool = False
    allow_even_m: bool = False
    checkpoint_every: int = 1024

    def __post_init__(self) -> None:
        _check_m(self.m, allow_even=self.allow_even_m)
        if self.sign not in ("minus", "plus", "both"):
            raise InputError(f"sign must be minus/plus/both, got {self.sign!r}")
        idx, count = self.chunk
        if count < 1 or not 0 <= idx < count:
            raise InputError(f"chunk index/count {self.chunk} invalid")
        if self.b_window is not None:
            start, stop = self.b_window
            if start < 0 or stop < start:
                raise InputError(f"b_window {self.b_window} invalid")
        if self.checkpoint_every < 1:
            raise InputError("checkpoint_every must be at least 1")

    @property
    def n(self) -> int:
        return 4 * self.m * self.m


@dataclass(frozen=True)
class FoundOrbit:
    """One circulant Hadamard orbit, named by its canonical rotation."""

    sequence: BitSequence
    weight: int
    orbit_size: int
    autocorrelation: tuple


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    found: tuple
    sequences_found: int
    candidates_checked: int
    b_steps: int
    elapsed_seconds: float
    resumed_from: int = 0

    @property
    def n(self) -> int:
        return self.config.n


def record_dict(orbit: FoundOrbit, m: int, chunk: tuple) -> dict:
    return {
        "n": 4 * m * m,
        "m": m,
        "weight": orbit.weight,
        "sequence": format_sequence(orbit.sequence),
        "autocorrelation": list(orbit.autocorrelation),
        "orbit_size": orbit.orbit_size,
        "chunk": list(chunk),
    }


def record_line(orbit: FoundOrbit, m: int, chunk: tuple) -> str:
    """Canonical JSON for one found orbit; the byte-stable record format."""
    return json.dumps(record_dict(orbit, m, chunk), sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class _Lane:
    split: SplitConstraint
    start: int  # global step index of this lane's first step
    size: int   # number of first-half sequences in the lane


def _plan_lanes(config: SearchConfig) -> tuple:
    half = 2 * config.m * config.m
    if config.mirror_minus:
        families = ("minus",)
    elif config.sign == "both":
        families = ("minus", "plus")
    else:
        families = (config.sign,)
    lanes = []
    offset = 0
    wanted = None
    if config.splits is not None:
        wanted = {(s.a, s.b) if isinstance(s, SplitConstraint) else tuple(s) for s in config.splits}
    for family in families:
        for split in _scan_splits(config.m, family):
            if wanted is not None and (split.a, split.b) not in wanted:
                continue
            size = math.comb(half, split.a)
            lanes.append(_Lane(split, offset, size))
            offset += size
    return tuple(lanes), offset


def total_steps(config: SearchConfig) -> int:
    """Number of first-half steps a full (unchunked, unwindowed) job covers."""
    _, total = _plan_lanes(config)
    return total


def _chunk_window(total: int, chunk: tuple) -> tuple:
    idx, count = chunk
    lo = -(-total * idx // count)
    hi = -(-total * (idx + 1) // count)
    return lo, hi


def _read_checkpoint(path: str) -> int:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read().strip()
    try:
        value = int(text)
    except ValueError:
        raise InputError(f"checkpoint file {path!r} is not a decimal step count") from None
    if value < 0:
        raise InputError(f"checkpoint file {path!r} holds a negative step count")
    return value


def _write_checkpoint(path: str, step: int) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(f"{step}\n")
    os.replace(tmp, path)


def _mirror_orbit(orbit: FoundOrbit) -> FoundOrbit:
    flipped = orbit_of(negate(orbit.sequence))
    vec = autocorrelation_vector(flipped.canonical)
    return FoundOrbit(
        sequence=flipped.canonical,
        weight=flipped.canonical.bits.bit_count(),
        orbit_size=flipped.size,
        autocorrelation=tuple(vec.values),
    )


def search(config: SearchConfig, checkpoint_path=None) -> SearchReport:
    """Run one search job and report everything it found.

    When ``checkpoint_path`` is given, progress (the next global step to
    process, decimal, newline-terminated) is written there every
    ``checkpoint_every`` completed steps and at completion; if the file
    already exists the job resumes from the recorded step.  A checkpoint only
    makes sense against the same configuration that produced it.  On
    KeyboardInterrupt the checkpoint is flushed before the interrupt
    propagates.
    """
    t0 = time.perf_counter()
    m = config.m
    n = config.n
    half = 2 * m * m
    half_mask = _mask(half)
    m_sq = m * m
    use_filter = config.use_half_shift_filter

    lanes, total = _plan_lanes(config)
    lo, hi = _chunk_window(total, config.chunk)
    if config.b_window is not None:
        lo = max(lo, config.b_window[0])
        hi = min(hi, config.b_window[1])
    resumed_from = 0
    if checkpoint_path is not None and os.path.exists(checkpoint_path):
        resumed_from = _read_checkpoint(checkpoint_path)
        lo = max(lo, resumed_from)

    raw_hits = 0
    candidates = 0
    b_steps = 0
    hits_by_bits: dict = {}
    step = lo
    try:
        for lane in lanes:
            lane_lo = max(lo, lane.start)
            lane_hi = min(hi, lane.start + lane.size)
            if lane_lo >= lane_hi:
                continue
            c_list = list(iter_weight_class_bits(half, lane.split.b))
            step = lane_lo
            for b_bits in iter_weight_class_bits(
                half, lane.split.a, lane_lo - lane.start, lane_hi - lane.start
            ):
                for c_bits in c_list:
                    if use_filter and (~(b_bits ^ c_bits) & half_mask).bit_count() != m_sq:
                        continue
                    candidates += 1
                    x_bits = b_bits | (c_bits << half)
                    if _is_ch_bits(x_bits, n):
                        raw_hits += 1
                        if x_bits not in hits_by_bits:
                            hits_by_bits[x_bits] = BitSequence(n, x_bits)
                b_steps += 1
                step += 1
                if checkpoint_path is not None and b_steps % config.checkpoint_every == 0:
                    _write_checkpoint(checkpoint_path, step)
    except KeyboardInterrupt:
        if checkpoint_path is not None:
            _write_checkpoint(checkpoint_path, step)
        raise
    if checkpoint_path is not None:
        _write_checkpoint(checkpoint_path, hi)

    orbits: dict = {}
    for x in hits_by_bits.values():
        orb = orbit_of(x)
        key = orb.canonical.bits
        if key in orbits:
            continue
        vec = autocorrelation_vector(orb.canonical)
        if vec.values[0] != n or any(v != 0 for v in vec.values[1:]):
            raise InvariantViolation(
                f"found candidate fails the checksum: {orb.canonical} vector {vec.values}"
            )
        orbits[key] = FoundOrbit(
            sequence=orb.canonical,
            weight=orb.canonical.bits.bit_count(),
            orbit_size=orb.size,
            autocorrelation=tuple(vec.values),
        )

    found = list(orbits.values())
    if config.mirror_minus and config.sign == "plus":
        # negation is a weight-complementing bijection, so counts carry over
        found = [_mirror_orbit(o) for o in found]
    elif config.mirror_minus and config.sign == "both":
        mirrored = [_mirror_orbit(o) for o in found]
        raw_hits *= 2
        seen = {o.sequence.bits for o in found}
        found.extend(o for o in mirrored if o.sequence.bits not in seen)

    found.sort(key=lambda o: format_sequence(o.sequence))
    return SearchReport(
        config=config,
        found=tuple(found),
        sequences_found=raw_hits,
        candidates_checked=candidates,
        b_steps=b_steps,
        elapsed_seconds=time.perf_counter() - t0,
        resumed_from=resumed_from,
    )


def merge_reports(reports, merged_chunk: tuple = (0, 1)) -> SearchReport:
    """Combine chunk reports into one, as if a single job had scanned the union.

    Found orbits are deduplicated by canonical form and re-sorted; counters
    add up; the merged report carries ``merged_chunk`` as its provenance so
    its records match a single run over the combined window byte for byte.
    """
    reports = list(reports)
    if not reports:
        raise InputError("nothing to merge")
    base = reports[0].config
    for r in reports[1:]:
        c = r.config
        if (c.m, c.sign, c.mirror_minus, c.splits) != (base.m, base.sign, base.mirror_minus, base.splits):
            raise InputError("refusing to merge reports from different search configurations")
    orbits: dict = {}
    for r in reports:
        for o in r.found:
            orbits.setdefault(o.sequence.bits, o)
    found = sorted(orbits.values(), key=lambda o: format_sequence(o.sequence))
    merged_config = replace(base, chunk=tuple(merged_chunk), b_window=None)
    return SearchReport(
        config=merged_config,
        found=tuple(found),
        sequences_found=sum(r.sequences_found for r in reports),
        candidates_checked=sum(r.candidates_checked for r in reports),
        b_steps=sum(r.b_steps for r in reports),
        elapsed_seconds=sum(r.elapsed_seconds for r in reports),
    )


def _run_chunk(config: SearchConfig) -> SearchReport:
    return search(config)


def run_parallel(config: SearchConfig, jobs: int) -> SearchReport:
    """Fan the configured chunk out over ``jobs`` worker processes and merge.

    The job's window is subdivided exactly, so the merged report equals the
    sequential one.  Parallel runs do not checkpoint; use chunks for
    restartable distribution instead.
    """
    if jobs < 1:
        raise InputError(f"jobs must be at least 1, got {jobs}")
    if jobs == 1:
        return search(config)
    idx, count = config.chunk
    subconfigs = [
        replace(config, chunk=(idx * jobs + j, count * jobs)) for j in range(jobs)
    ]
    with Pool(processes=jobs) as pool:
        reports = pool.map(_run_chunk, subconfigs)
    return merge_reports(reports, merged_chunk=config.chunk)


@dataclass(frozen=True)
class SearchSpaceSize:
    reduced: int
    unreduced: int


def search_space_size(m: int) -> SearchSpaceSize:
    """Candidate counts with and without the half-weight split restriction.

    Reduced: twice the sum over admissible first-half weights a of
    C(2m², a) · C(2m², 2m² - m - a), the factor two covering both admissible
    total weights.  Unreduced: twice C(4m², 2m² - m), all sequences of either
    admissible weight.
    """
    _check_m(m)
    half = 2 * m * m
    reduced = 2 * sum(
        math.comb(half, a) * math.comb(half, half - m - a) for a in _split_range(m)
    )
    unreduced = 2 * math.comb(4 * m * m, half - m)
    return SearchSpaceSize(reduced=reduced, unreduced=unreduced)


@dataclass(frozen=True)
class DifferenceSetClaim:
    """A claimed (n, k, lam) difference set inside the integers mod n."""

    n: int
    k: int
    lam: int
    elements: tuple


@dataclass(frozen=True)
class DifferenceSetCheck:
    valid: bool
    histogram: dict


def hadamard_to_difference_set(x: BitSequence) -> DifferenceSetClaim:
    """The difference set a circulant Hadamard sequence carries.

    The support of the rarer symbol (the +1 positions at weight 2m² - m, the
    -1 positions at weight 2m² + m) forms a (4m², 2m² - m, m² - m) difference
    set in the integers mod 4m².
    """
    n = x.n
    m = math.isqrt(n // 4)
    if n % 4 or 4 * m * m != n or m < 1:
        raise InputError(f"length {n} is not 4m² for a positive integer m")
    if not is_circulant_hadamard(x):
        raise InputError(f"{format_sequence(x)} is not a circulant Hadamard sequence")
    w = x.bits.bit_count()
    if w == 2 * m * m - m:
        elements = plus_support(x)
    elif w == 2 * m * m + m:
        elements = plus_support(negate(x))
    else:
        raise InvariantViolation(
            f"circulant Hadamard sequence with inadmissible weight {w} at n={n}"
        )
    return DifferenceSetClaim(n=n, k=2 * m * m - m, lam=m * m - m, elements=elements)


def verify_difference_set(claim: DifferenceSetClaim) -> DifferenceSetCheck:
    """Check a difference-set claim by tallying all pairwise differences.

    The histogram maps every nonzero residue to the number of ordered pairs
    of distinct elements realising it; the claim is valid when the element
    count matches k and every residue is hit exactly lam times.
    """
    n = claim.n
    if n < 2:
        raise InputError(f"group order must be at least 2, got {n}")
    elements = tuple(claim.elements)
    if len(set(elements)) != len(elements):
        raise InputError("difference-set elements must be distinct")
    for e in elements:
        if not 0 <= e < n:
            raise InputError(f"element {e} outside the integers mod {n}")
    histogram = {d: 0 for d in range(1, n)}
    for x in elements:
        for y in elements:
            if x != y:
                histogram[(x - y) % n] += 1
    valid = len(elements) == claim.k and all(
        histogram[d] == claim.lam for d in range(1, n)
    )
    return DifferenceSetCheck(valid=valid, histogram=histogram)
