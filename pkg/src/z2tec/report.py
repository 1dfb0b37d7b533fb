"""Line-oriented report rendering.

Machine output is ``key=value`` lines in a fixed order; rationals are always
``p/q`` in lowest terms, so parsing a rendered report gives back an equal one.
Absent fields are omitted.  ``class`` repeats once per representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .measure import Measure

_BOOL = {"true": True, "false": False}


def _b(x: Optional[bool]) -> str:
    return "n/a" if x is None else str(x).lower()


def _parse_b(text: str) -> Optional[bool]:
    if text == "n/a":
        return None
    try:
        return _BOOL[text]
    except KeyError:
        raise ValueError(f"bad boolean field: {text!r}") from None


def _measure(text: str) -> Measure:
    return Measure.from_masses(text.split())


@dataclass
class Report:
    kind: str
    measure: Measure
    closed_form: Optional[bool] = None
    oracle: Optional[bool] = None
    branch: Optional[str] = None
    decomposition: Optional[str] = None
    shift: Optional[int] = None
    counterexample: Optional[Measure] = None
    class_reps: Optional[list] = None

    @property
    def agree(self) -> Optional[bool]:
        if self.closed_form is None or self.oracle is None:
            return None
        return self.closed_form == self.oracle

    def to_machine(self) -> str:
        lines = [f"report={self.kind}", f"l={self.measure.l}", f"masses={self.measure}"]
        if self.kind == "classify":
            lines += [
                f"closed_form={_b(self.closed_form)}",
                f"oracle={_b(self.oracle)}",
                f"agree={_b(self.agree)}",
                f"branch={self.branch or '-'}",
                f"decomposition={self.decomposition or '-'}",
                f"shift={'-' if self.shift is None else self.shift}",
                f"counterexample={self.counterexample or '-'}",
            ]
        if self.class_reps is not None:
            lines.append(f"class_size={len(self.class_reps)}")
            lines += [f"class={m}" for m in self.class_reps]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_machine(cls, text: str) -> Report:
        fields: dict = {}
        reps = []
        for n, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"line {n}: expected key=value")
            if key == "class":
                reps.append(_measure(value))
            else:
                fields[key] = value
        measure = _measure(fields["masses"])
        if int(fields["l"]) != measure.l:
            raise ValueError("l does not match the number of masses")
        rep = cls(fields["report"], measure)
        if rep.kind == "classify":
            rep.closed_form = _parse_b(fields["closed_form"])
            rep.oracle = _parse_b(fields["oracle"])
            rep.branch = None if fields["branch"] == "-" else fields["branch"]
            rep.decomposition = None if fields["decomposition"] == "-" else fields["decomposition"]
            rep.shift = None if fields["shift"] == "-" else int(fields["shift"])
            ce = fields["counterexample"]
            rep.counterexample = None if ce == "-" else _measure(ce)
            if _parse_b(fields["agree"]) != rep.agree:
                raise ValueError("agree field inconsistent with verdicts")
        if "class_size" in fields:
            if int(fields["class_size"]) != len(reps):
                raise ValueError("class_size does not match the listed representatives")
            rep.class_reps = reps
        return rep

    def to_human(self) -> str:
        out = [f"measure (l={self.measure.l}): {self.measure}"]
        if self.kind == "classify":
            if self.agree is False:
                out.append("!!! DISAGREEMENT between closed-form classifier and oracle !!!")
            verdict = "trivial equivalence class" if self.oracle else "NOT in the trivial equivalence class"
            out.append(f"verdict: {verdict}")
            out.append(f"  closed form: {_b(self.closed_form)}   oracle: {_b(self.oracle)}")
            if self.branch:
                where = f" on {self.decomposition}" if self.decomposition else ""
                out.append(f"  witness: {self.branch}{where}, normalizing shift x{self.shift}")
            if self.counterexample is not None:
                out.append(f"  equivalent non-shift measure: {self.counterexample}")
        if self.class_reps is not None:
            out.append(f"equivalence class: {len(self.class_reps)} representative(s) up to shift")
            out += [f"  {m}" for m in self.class_reps]
        return "\n".join(out) + "\n"
