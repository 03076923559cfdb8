"""Aggregates messages into one-paragraph documents and writes them out.

Two layouts are supported: ``combined`` writes every paragraph into
``summary.txt`` with a header line per subject, ``per-identifier`` writes one
file per class and per method under ``classes/`` and ``methods/``. Output is
UTF-8 with LF newlines and is byte-identical across runs on the same model.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .model import CodeModel
from .summarizer import RapidSummaryMessage, RenderingConfig, class_messages, method_messages

COMBINED = "combined"
PER_IDENTIFIER = "per-identifier"

_UNSAFE_FILENAME_CHARS = re.compile(r"[^A-Za-z0-9_.\-]")


@dataclass(frozen=True)
class SummaryDocument:
    """One subject's aggregated paragraph."""

    subject_kind: str  # "class" or "method"
    package: str
    class_name: str
    method_name: str | None
    parameter_types: tuple[str, ...]
    body: str

    @property
    def subject_path(self) -> str:
        path = f"{self.package}.{self.class_name}"
        if self.method_name is not None:
            path += f".{self.method_name}({', '.join(self.parameter_types)})"
        return path


@dataclass(frozen=True)
class SummarySet:
    """All documents for one project: each class first, then its methods."""

    project_name: str
    documents: tuple[SummaryDocument, ...]

    def __iter__(self) -> Iterator[SummaryDocument]:
        return iter(self.documents)

    def __len__(self) -> int:
        return len(self.documents)


def aggregate(messages: list[RapidSummaryMessage]) -> str:
    """Join message texts into one paragraph with single spaces."""
    if not messages:
        raise ValueError("cannot aggregate an empty message list")
    return " ".join(message.text for message in messages)


def summarize_project(model: CodeModel, config: RenderingConfig) -> SummarySet:
    """One document per class and per method, in model traversal order."""
    documents: list[SummaryDocument] = []
    for package in model.packages:
        for cls in package.classes:
            documents.append(
                SummaryDocument(
                    subject_kind="class",
                    package=package.name,
                    class_name=cls.name,
                    method_name=None,
                    parameter_types=(),
                    body=aggregate(class_messages(cls, config)),
                )
            )
            for method in cls.methods:
                documents.append(
                    SummaryDocument(
                        subject_kind="method",
                        package=package.name,
                        class_name=cls.name,
                        method_name=method.name,
                        parameter_types=tuple(param.declared_type for param in method.parameters),
                        body=aggregate(method_messages(method, config)),
                    )
                )
    return SummarySet(project_name=model.project_name, documents=tuple(documents))


def _sanitize(component: str) -> str:
    return _UNSAFE_FILENAME_CHARS.sub("-", component)


def _method_file_name(document: SummaryDocument, overloaded: bool) -> str:
    name = f"{document.package}.{document.class_name}.{document.method_name}"
    if overloaded and document.parameter_types:
        name += "_" + "_".join(document.parameter_types)
    return _sanitize(name) + ".txt"


def plan_emission(summaries: SummarySet, layout: str, out_dir: Path) -> list[tuple[Path, str]]:
    """Map every document to its target path and exact file content.

    Raises ValueError on an unknown layout or when two documents map to the
    same path; nothing is written, so callers can abort with a clean tree.
    """
    if layout == COMBINED:
        blocks = [
            f"== {document.subject_kind} {document.subject_path} ==\n{document.body}\n"
            for document in summaries
        ]
        return [(out_dir / "summary.txt", "\n".join(blocks))]

    if layout != PER_IDENTIFIER:
        raise ValueError(f"unknown layout {layout!r}")

    overloaded_names = _overloaded_method_names(summaries)
    planned: list[tuple[Path, str]] = []
    used: dict[Path, str] = {}
    for document in summaries:
        if document.subject_kind == "class":
            name = _sanitize(f"{document.package}.{document.class_name}") + ".txt"
            path = out_dir / "classes" / name
        else:
            key = (document.package, document.class_name, document.method_name)
            path = out_dir / "methods" / _method_file_name(document, key in overloaded_names)
        if path in used:
            raise ValueError(
                f"summary file name collision: {used[path]!r} and {document.subject_path!r} "
                f"both map to {path.as_posix()}"
            )
        used[path] = document.subject_path
        planned.append((path, document.body + "\n"))
    return planned


def write_plan(planned: list[tuple[Path, str]]) -> list[Path]:
    """Write planned files, creating parent directories; returns the paths."""
    written: list[Path] = []
    for path, content in planned:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8", newline="\n")
        written.append(path)
    return written


def emit(summaries: SummarySet, layout: str, out_dir: Path) -> list[Path]:
    """Write the documents; returns the created paths in write order."""
    return write_plan(plan_emission(summaries, layout, out_dir))


def _overloaded_method_names(summaries: SummarySet) -> set[tuple[str, str, str | None]]:
    counts: dict[tuple[str, str, str | None], int] = {}
    for document in summaries:
        if document.subject_kind == "method":
            key = (document.package, document.class_name, document.method_name)
            counts[key] = counts.get(key, 0) + 1
    return {key for key, count in counts.items() if count > 1}
