"""Seeded randomized search for LCD codes with good binary-image parameters.

Each trial draws a generator matrix from its own counter-based stream
(Philox keyed by the seed, counter set to the trial index), so results are
reproducible and independent of how trials are split across workers. The
best-known table keeps, per (image length, image dimension), the entry
with the largest distance; ties go to the lexicographically smallest
serialized matrix, which makes the fold order-independent.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .ambient import Shape
from .code import Code, ZERO_CODE_DISTANCE
from .errors import EnumerationCapError
from .formats import matrix_from_line, matrix_to_line
from .lcd import gram_criterion, is_lcd_ground_truth
from .linalg import MixedMatrix

FILTER_LABELS = ("gram", "ground-truth")


@dataclass(frozen=True)
class SearchConfig:
    shape: Shape
    k: int
    trials: int
    seed: int
    filter_order: tuple[str, ...] = FILTER_LABELS
    distance_cap: int = 24
    jobs: int = 1

    def __post_init__(self):
        if self.trials < 0 or self.k < 1:
            raise ValueError("trials must be >= 0 and k >= 1")
        for label in self.filter_order:
            if label not in FILTER_LABELS:
                raise ValueError(f"unknown filter label {label!r}")


@dataclass(frozen=True)
class RecordEntry:
    n: int
    gray_k: int
    gray_d: int
    matrix_line: str
    gram_invertible: bool
    seed: int
    trial: int

    def key(self) -> tuple[int, int]:
        return (self.n, self.gray_k)

    def quality(self) -> tuple[int, str]:
        # larger distance first; ties to the lexicographically smallest matrix
        return (-self.gray_d, self.matrix_line)


@dataclass
class SearchRecord:
    entries: dict[tuple[int, int], RecordEntry] = field(default_factory=dict)
    events: list[RecordEntry] = field(default_factory=list)

    def consider(self, entry: RecordEntry) -> bool:
        cur = self.entries.get(entry.key())
        if cur is not None and cur.quality() <= entry.quality():
            return False
        self.entries[entry.key()] = entry
        self.events.append(entry)
        return True

    def merge(self, other: "SearchRecord") -> None:
        for entry in other.events:
            self.consider(entry)

    def table_lines(self) -> list[str]:
        out = []
        for key in sorted(self.entries):
            e = self.entries[key]
            out.append(
                f"n={e.n} k={e.gray_k} d={e.gray_d} gram={'true' if e.gram_invertible else 'false'} "
                f"seed={e.seed} trial={e.trial} matrix={e.matrix_line}"
            )
        return out

    def dump_table(self, path: Path) -> None:
        Path(path).write_text("\n".join(self.table_lines()) + "\n", encoding="utf-8")

    @staticmethod
    def parse_entry(line: str) -> RecordEntry:
        fields = dict(part.split("=", 1) for part in line.strip().split(" ", 6))
        return RecordEntry(
            n=int(fields["n"]),
            gray_k=int(fields["k"]),
            gray_d=int(fields["d"]),
            gram_invertible=fields["gram"] == "true",
            seed=int(fields["seed"]),
            trial=int(fields["trial"]),
            matrix_line=fields["matrix"],
        )

    @classmethod
    def load_table(cls, path: Path) -> "SearchRecord":
        rec = cls()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            if line.strip():
                rec.consider(cls.parse_entry(line))
        return rec

    def verify(self) -> bool:
        """Re-check every recorded matrix from its serialized form."""
        for e in self.entries.values():
            code = Code(matrix_from_line(e.matrix_line))
            if not is_lcd_ground_truth(code):
                return False
        return True


@dataclass
class SearchCounters:
    trials: int = 0
    gram_accepts: int = 0
    lcd: int = 0
    distance_skipped: int = 0
    recorded: int = 0

    def merge(self, other: "SearchCounters") -> None:
        self.trials += other.trials
        self.gram_accepts += other.gram_accepts
        self.lcd += other.lcd
        self.distance_skipped += other.distance_skipped
        self.recorded += other.recorded


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, trial): Philox key = seed, counter = trial."""
    bits = np.random.Philox(counter=[0, 0, 0, trial], key=[seed & (2**64 - 1), 0])
    return np.random.Generator(bits)


def random_generator(shape: Shape, k: int, rng: np.random.Generator) -> MixedMatrix:
    """Uniform i.i.d. entries; binary block drawn first, then the ring block."""
    bits = rng.integers(0, 2, size=(k, shape.alpha), dtype=np.uint8)
    ringp = rng.integers(0, 4, size=(k, shape.beta), dtype=np.uint8)
    return MixedMatrix(shape, bits, ringp)


def _evaluate_trial(cfg: SearchConfig, trial: int, inject: MixedMatrix | None):
    if trial == 0 and inject is not None:
        m = inject
    else:
        m = random_generator(cfg.shape, cfg.k, trial_rng(cfg.seed, trial))
    code = Code(m, cap_exponent=cfg.distance_cap)
    gram_ok = False
    lcd = None
    for label in cfg.filter_order:
        if label == "gram":
            gram_ok = gram_criterion(code)
        elif label == "ground-truth":
            lcd = is_lcd_ground_truth(code)
    if lcd is None:  # ground truth always confirms before recording
        lcd = is_lcd_ground_truth(code)
    return m, code, gram_ok, lcd


def _run_range(cfg: SearchConfig, lo: int, hi: int, inject) -> tuple[SearchRecord, SearchCounters]:
    rec = SearchRecord()
    counters = SearchCounters()
    for trial in range(lo, hi):
        counters.trials += 1
        m, code, gram_ok, lcd = _evaluate_trial(cfg, trial, inject)
        if gram_ok:
            counters.gram_accepts += 1
        if not lcd:
            continue
        counters.lcd += 1
        try:
            d = code.min_lee_distance()
        except EnumerationCapError:
            counters.distance_skipped += 1
            continue
        if d is ZERO_CODE_DISTANCE:
            continue
        entry = RecordEntry(
            n=code.shape.n,
            gray_k=code.gray_image().dimension,
            gray_d=int(d),
            matrix_line=matrix_to_line(m),
            gram_invertible=gram_ok,
            seed=cfg.seed,
            trial=trial,
        )
        if rec.consider(entry):
            counters.recorded += 1
    return rec, counters


def run_search(
    cfg: SearchConfig, inject: MixedMatrix | None = None, log_path: Path | None = None
) -> tuple[SearchRecord, SearchCounters]:
    """Run the configured trials; the result is independent of cfg.jobs."""
    jobs = max(1, cfg.jobs)
    bounds = [(cfg.trials * i) // jobs for i in range(jobs + 1)]
    ranges = [(bounds[i], bounds[i + 1]) for i in range(jobs) if bounds[i] < bounds[i + 1]]
    record = SearchRecord()
    counters = SearchCounters()
    if len(ranges) <= 1:
        record, counters = _run_range(cfg, 0, cfg.trials, inject)
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(
                pool.map(lambda r: _run_range(cfg, r[0], r[1], inject), ranges)
            )
        # deterministic fold in trial-range order
        for rec, cnt in parts:
            record.merge(rec)
            counters.merge(cnt)
    if log_path is not None:
        with open(log_path, "a", encoding="utf-8") as fh:
            for e in record.events:
                fh.write(
                    f"n={e.n} k={e.gray_k} d={e.gray_d} "
                    f"gram={'true' if e.gram_invertible else 'false'} "
                    f"seed={e.seed} trial={e.trial} matrix={e.matrix_line}\n"
                )
    return record, counters
