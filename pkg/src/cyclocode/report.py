"""Verification records and CSV/JSON emission."""

import csv
import json
from dataclasses import dataclass

from .errors import IoError

CSV_COLUMNS = [
    "theorem_id",
    "q",
    "n",
    "n1",
    "n2",
    "claimed_n",
    "claimed_k",
    "claimed_d",
    "measured_n",
    "measured_k",
    "measured_d",
    "status",
    "elapsed_s",
]

THEOREM_IDS = (
    "CN-DIST",
    "CN1-DIST",
    "CN-DUAL-DIST",
    "TENSOR-EQUIV",
    "CN1-DUAL-SUM",
    "FACTORIZATION",
    "CONJECTURE-CN1-DUAL",
)

STATUSES = ("pass", "fail", "skipped", "n/a", "observed")


@dataclass
class VerificationRecord:
    theorem_id: str
    q: int
    n: int | None = None
    n1: int | None = None
    n2: int | None = None
    claimed: tuple = (None, None, None)  # (n, k, d)
    measured: tuple = (None, None, None)
    status: str = "n/a"
    elapsed: float = 0.0
    note: str = ""

    def to_dict(self):
        return {
            "theorem_id": self.theorem_id,
            "q": self.q,
            "n": self.n,
            "n1": self.n1,
            "n2": self.n2,
            "claimed": list(self.claimed),
            "measured": list(self.measured),
            "status": self.status,
            "elapsed_s": round(self.elapsed, 3),
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            theorem_id=d["theorem_id"],
            q=d["q"],
            n=d.get("n"),
            n1=d.get("n1"),
            n2=d.get("n2"),
            claimed=tuple(d.get("claimed", (None, None, None))),
            measured=tuple(d.get("measured", (None, None, None))),
            status=d["status"],
            elapsed=d.get("elapsed_s", 0.0),
            note=d.get("note", ""),
        )

    def to_csv_row(self):
        def s(v):
            return "" if v is None else v

        return [
            self.theorem_id,
            self.q,
            s(self.n),
            s(self.n1),
            s(self.n2),
            s(self.claimed[0]),
            s(self.claimed[1]),
            s(self.claimed[2]),
            s(self.measured[0]),
            s(self.measured[1]),
            s(self.measured[2]),
            self.status,
            f"{self.elapsed:.3f}",
        ]


def emit_report(records, fmt, path, deterministic=False):
    """Write records to path as csv or json.

    With deterministic=True, elapsed times (the only run-dependent field)
    are zeroed so two runs with the same config produce identical files.
    """
    if fmt not in ("csv", "json"):
        raise IoError(f"unknown report format {fmt!r}")
    if deterministic:
        recs = []
        for r in records:
            r2 = VerificationRecord(**{**r.__dict__})
            r2.elapsed = 0.0
            recs.append(r2)
        records = recs
    try:
        if fmt == "csv":
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(CSV_COLUMNS)
                for r in records:
                    writer.writerow(r.to_csv_row())
        else:
            with open(path, "w") as fh:
                json.dump([r.to_dict() for r in records], fh, indent=2)
                fh.write("\n")
    except OSError as exc:
        raise IoError(str(exc)) from exc
    return path
