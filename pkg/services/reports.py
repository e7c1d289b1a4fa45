"""Report objects shared by every verification and by the CLI / HTTP front ends."""

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from services.exactalg import MatrixRF, RationalFunction, rf_equal


@dataclass
class Report:
    check: str
    parameters: dict
    items: list = field(default_factory=list)
    conventions: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)
    elapsed_ms: int = 0
    timing: bool = False

    def add(self, name, ok, residual=None):
        item = {"name": name, "status": "pass" if ok else "fail"}
        if not ok:
            item["residual"] = str(residual) if residual not in (None, "", "0") else "mismatch"
        self.items.append(item)
        return ok

    def compare(self, name, lhs, rhs):
        """Exact comparison of two rational functions or matrices."""
        if isinstance(lhs, MatrixRF):
            ok = lhs == rhs
            residual = None if ok else str(lhs - rhs)
        else:
            lhs = RationalFunction.coerce(lhs)
            rhs = RationalFunction.coerce(rhs)
            ok = rf_equal(lhs, rhs)
            residual = None if ok else str(lhs - rhs)
        return self.add(name, ok, residual)

    def merge(self, other, prefix=""):
        for item in other.items:
            copy = dict(item)
            copy["name"] = prefix + item["name"]
            self.items.append(copy)
        for k, v in other.conventions.items():
            self.conventions.setdefault(k, v)

    @property
    def passed(self):
        return all(item["status"] == "pass" for item in self.items)

    @contextmanager
    def timer(self):
        start = time.perf_counter()
        try:
            yield self
        finally:
            if self.timing:
                self.elapsed_ms = int((time.perf_counter() - start) * 1000)

    def to_json(self):
        out = {
            "check": self.check,
            "parameters": self.parameters,
            "items": self.items,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.conventions:
            out["conventions"] = self.conventions
        if self.data:
            out["data"] = self.data
        return out

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    return Report(
        check=data["check"],
        parameters=data.get("parameters", {}),
        items=list(data.get("items", [])),
        conventions=dict(data.get("conventions", {})),
        data=dict(data.get("data", {})),
        elapsed_ms=int(data.get("elapsed_ms", 0)),
    )


def fraction_matrix_json(M):
    return [[str(x) for x in row] for row in M]
