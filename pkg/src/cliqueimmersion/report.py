"""Pass/fail check reports shared by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Named pass/fail checks; ``ok`` is true when every check passed."""

    checks: dict[str, bool] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, message: str | None = None) -> None:
        self.checks[name] = self.checks.get(name, True) and passed
        if not passed and message:
            self.messages.append(f"{name}: {message}")

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks), "messages": list(self.messages)}
