"""Word accuracy of engine output against token-aligned gold Urdu.

Gold corpus files hold one case per block, blocks separated by blank
lines: the first line is the Roman input, the second the gold Urdu words
separated by tabs.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .errors import AlignmentError, DataError
from .pipeline import Route, TransliterationOutput


@dataclass(frozen=True)
class EvalCase:
    roman_input: str
    gold_urdu_words: tuple[str, ...]
    case_id: str = ""


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    words: int
    correct: int
    mismatches: tuple[int, ...]


@dataclass(frozen=True)
class EvalReport:
    total_words: int
    correct_words: int
    ambiguous_total: int
    ambiguous_correct: int
    per_case: tuple[CaseResult, ...] = field(default=())

    @property
    def empty(self) -> bool:
        """True when accuracy is 1.0 only by the empty-corpus convention."""
        return self.total_words == 0

    @property
    def accuracy(self) -> float:
        return self.correct_words / self.total_words if self.total_words else 1.0

    @property
    def ambiguous_accuracy(self) -> float:
        return self.ambiguous_correct / self.ambiguous_total if self.ambiguous_total else 1.0

    def summary_line(self) -> str:
        return f"accuracy={self.accuracy:.6f} ambiguous_accuracy={self.ambiguous_accuracy:.6f}"


def _output_units(output: TransliterationOutput) -> list[tuple[str, bool]]:
    units = []
    for trace in output.traces:
        ambiguous = trace.route is Route.LEXICON_DISAMBIGUATED
        units.extend((u, ambiguous) for u in trace.units)
    return units


def evaluate(outputs: Sequence[TransliterationOutput], gold: Sequence[EvalCase]) -> EvalReport:
    """Compare outputs to gold case by case; words must match byte for byte."""
    if len(outputs) != len(gold):
        raise AlignmentError(f"{len(outputs)} outputs for {len(gold)} gold cases")
    total = correct = amb_total = amb_correct = 0
    per_case = []
    for idx, (out, case) in enumerate(zip(outputs, gold)):
        case_id = case.case_id or str(idx + 1)
        units = _output_units(out)
        if len(units) != len(case.gold_urdu_words):
            position = min(len(units), len(case.gold_urdu_words))
            raise AlignmentError(
                f"case {case_id}: system produced {len(units)} words, gold has "
                f"{len(case.gold_urdu_words)} (first unmatched position {position})",
                case=case_id,
                position=position,
            )
        mismatches = []
        for pos, ((word, ambiguous), ref) in enumerate(zip(units, case.gold_urdu_words)):
            hit = word == ref
            if not hit:
                mismatches.append(pos)
            if ambiguous:
                amb_total += 1
                amb_correct += hit
        total += len(units)
        correct += len(units) - len(mismatches)
        per_case.append(CaseResult(case_id, len(units), len(units) - len(mismatches), tuple(mismatches)))
    return EvalReport(total, correct, amb_total, amb_correct, tuple(per_case))


def parse_gold(lines: Iterable[str], name: str = "<gold>") -> list[EvalCase]:
    cases: list[EvalCase] = []
    block: list[tuple[int, str]] = []

    def close() -> None:
        if not block:
            return
        if len(block) != 2:
            raise DataError(f"case needs exactly 2 lines, got {len(block)}", name, block[0][0])
        (lineno, roman), (_, gold) = block
        words = tuple(w for w in gold.split("\t") if w)
        cases.append(EvalCase(roman, words, f"{name}:{lineno}"))
        block.clear()

    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            close()
        elif not line.lstrip().startswith("#"):
            block.append((lineno, line))
    close()
    return cases


def read_gold(path: str | os.PathLike) -> list[EvalCase]:
    with open(path, encoding="utf-8") as fh:
        return parse_gold(fh, name=os.path.basename(path))


def loads_gold(text: str, name: str = "<gold>") -> list[EvalCase]:
    return parse_gold(io.StringIO(text), name=name)


def evaluate_engine(engine, gold: Sequence[EvalCase]) -> EvalReport:
    return evaluate([engine.transliterate(c.roman_input) for c in gold], gold)


def format_report(report: EvalReport, out: TextIO) -> None:
    """Aligned per-case table, then the machine-readable summary line."""
    width = max([len("case")] + [len(c.case_id) for c in report.per_case])
    out.write(f"{'case':<{width}}  words  correct  mismatched\n")
    for c in report.per_case:
        mism = ",".join(map(str, c.mismatches)) or "-"
        out.write(f"{c.case_id:<{width}}  {c.words:>5}  {c.correct:>7}  {mism}\n")
    out.write(
        f"{'TOTAL':<{width}}  {report.total_words:>5}  {report.correct_words:>7}  "
        f"ambiguous {report.ambiguous_correct}/{report.ambiguous_total}\n"
    )
    out.write(report.summary_line() + "\n")
