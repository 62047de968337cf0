"""Verification reports.

Validators never raise on invalid data: they return a Report listing each
checked equation with its residual (left side minus right side).
"""

from dataclasses import dataclass, field
from typing import List, Optional

from curved_hpl.graded import GradedMap
from curved_hpl.utils import Color


@dataclass
class Check:
    "One checked equation"
    name: str
    residual: Optional[GradedMap] = None
    message: str = ''
    failed: bool = False

    @property
    def passed(self) -> bool:
        "True if the equation holds"
        return not self.failed and (self.residual is None or self.residual.is_zero())

    def to_dict(self) -> dict:
        "Serialization; the residual is only kept on failure"
        data = {'name': self.name, 'passed': self.passed}
        if self.message:
            data['message'] = self.message
        if self.residual is not None and not self.passed:
            data['residual'] = self.residual.to_dict()
        return data

    def __str__(self):
        status = Color.green('PASS') if self.passed else Color.red('FAIL')
        detail = ''
        if self.residual is not None and not self.passed:
            detail = ' residual in ' + ', '.join(
                f'z^{i}ε^{j}' for i, j in self.residual.components)
        if self.message:
            detail += f' ({self.message})'
        return f'  [{status}] {self.name}{detail}'


@dataclass
class Report:
    "An ordered list of checks, with free notes"
    title: str
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, residual: GradedMap, message: str='') -> Check:
        "Records the residual of an equation"
        check = Check(name, residual, message)
        self.checks.append(check)
        return check

    def fail(self, name: str, message: str) -> Check:
        "Records a failure which has no residual map"
        check = Check(name, None, message, failed=True)
        self.checks.append(check)
        return check

    def note(self, message: str):
        "Adds a verification note"
        self.notes.append(message)

    def extend(self, other: 'Report', prefix: str=''):
        "Appends the checks and notes of another report"
        for check in other.checks:
            self.checks.append(Check(prefix + check.name, check.residual, check.message, check.failed))
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        "True if every check passed"
        return all(check.passed for check in self.checks)

    def failures(self) -> List[Check]:
        "The failed checks"
        return [check for check in self.checks if not check.passed]

    def __getitem__(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict:
        "Serialization"
        return {'title': self.title, 'ok': self.ok,
                'checks': [check.to_dict() for check in self.checks],
                'notes': list(self.notes)}

    def __str__(self):
        lines = [Color.bold(self.title)]
        lines.extend(str(check) for check in self.checks)
        lines.extend(f'  note: {note}' for note in self.notes)
        return '\n'.join(lines)
