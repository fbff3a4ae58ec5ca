"""Sorted knowledge bases of social contexts.

Load ``.sck`` documents, saturate them to their least fixpoint, then query,
explain, harvest and check the result.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Iterable, Sequence

from . import _sck
from ._sck import DEFAULT_FACT_CAP, Error

__all__ = ["DEFAULT_FACT_CAP", "Error", "KnowledgeBase", "ParseError", "load", "load_files", "rules"]


class ParseError(ValueError):
    """Raised when documents do not parse or are not well sorted."""

    def __init__(self, diagnostics: list[dict]):
        self.diagnostics = diagnostics
        super().__init__("\n".join(d["text"] for d in diagnostics))


class KnowledgeBase:
    def __init__(self, native: _sck.KnowledgeBase):
        self._kb = native

    def __len__(self) -> int:
        return len(self._kb)

    def __contains__(self, fact: str) -> bool:
        return self._kb.contains(fact)

    @property
    def asserted_count(self) -> int:
        return self._kb.asserted_count

    def saturate(self, fact_cap: int | None = None) -> dict:
        if fact_cap is None:
            fact_cap = int(os.environ.get("SCK_FACT_CAP", DEFAULT_FACT_CAP))
        return json.loads(self._kb.saturate(fact_cap))

    def query(self, pattern: str, mode: str = "stored") -> list[dict[str, str]]:
        return json.loads(self._kb.query(pattern, mode))

    def holds(self, fact: str) -> bool:
        """True when a stored fact covers ``fact`` over its whole interval."""
        return self._kb.holds(fact)

    def explain(self, fact: str) -> dict:
        return json.loads(self._kb.explain(fact))

    def explain_text(self, fact: str) -> str:
        return self._kb.explain_text(fact)

    def harvest(self, level: str, target: Sequence[str]) -> dict:
        return json.loads(self._kb.harvest(level, list(target)))

    def check(self) -> list[dict]:
        """Sort errors followed by obligation warnings."""
        return json.loads(self._kb.check_sorts()) + json.loads(self._kb.check_obligations())

    def export(self, with_derived: bool = False) -> str:
        return self._kb.export(with_derived)


def load(text: str, name: str = "<input>", mode: str = "strict") -> KnowledgeBase:
    return _load([(name, text)], mode)


def load_files(paths: Iterable[str | os.PathLike], mode: str = "strict") -> KnowledgeBase:
    return _load([(str(p), Path(p).read_text(encoding="utf-8")) for p in paths], mode)


def rules() -> list[dict]:
    return json.loads(_sck.rules())


def _load(documents: list[tuple[str, str]], mode: str) -> KnowledgeBase:
    native, diagnostics = _sck.load(documents, mode)
    if native is None:
        raise ParseError(diagnostics)
    return KnowledgeBase(native)
