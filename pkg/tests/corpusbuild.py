"""Assemble a public English plain-text corpus from locally installed
open-source documentation and docstrings.

The acceptance sanity band needs ~10 MB of real English. No corpus download
is available in the test environment, so we harvest the prose that ships
with installed packages: .rst/.md/.txt documentation files and module/class/
function docstrings. File order is sorted, so the result is deterministic
for a fixed environment, and it is cached on disk.

Set TOPICMAP_ACCEPTANCE_CORPUS to a plain-text file (one document per line)
to use a real corpus dump instead.
"""

from __future__ import annotations

import ast
import os
import re
import sysconfig
from pathlib import Path

TARGET_BYTES = 10 * 2**20
MIN_CHUNK_CHARS = 200
CACHE = Path.home() / ".cache" / "topicmap-acceptance" / "corpus.txt"

_WS = re.compile(r"\s+")

# docs that are prose, not license boilerplate or pinned requirement lists
_SKIP_NAME = re.compile(r"license|copying|notice|requirements|authors", re.I)


def _chunks_from_text(text: str):
    for para in re.split(r"\n\s*\n", text):
        flat = _WS.sub(" ", para).strip()
        if len(flat) >= MIN_CHUNK_CHARS:
            yield flat


def _chunks_from_python(path: Path):
    try:
        tree = ast.parse(path.read_bytes().decode("utf-8", "replace"))
    except (SyntaxError, ValueError):
        return
    for node in ast.walk(tree):
        if isinstance(
            node, (ast.Module, ast.ClassDef, ast.FunctionDef, ast.AsyncFunctionDef)
        ):
            doc = ast.get_docstring(node)
            if doc:
                flat = _WS.sub(" ", doc).strip()
                if len(flat) >= MIN_CHUNK_CHARS:
                    yield flat


def _source_files(root: Path):
    docs = []
    for suffix in ("*.rst", "*.md", "*.txt"):
        docs.extend(
            f
            for f in root.rglob(suffix)
            if f.is_file()
            and ".dist-info" not in f.parts
            and not _SKIP_NAME.search(f.name)
        )
    yield from ((f, "text") for f in sorted(docs))
    yield from ((f, "python") for f in sorted(root.rglob("*.py")) if f.is_file())


def assemble_corpus(target_bytes: int = TARGET_BYTES) -> Path:
    override = os.environ.get("TOPICMAP_ACCEPTANCE_CORPUS")
    if override:
        return Path(override)
    if CACHE.exists() and CACHE.stat().st_size >= 0.8 * target_bytes:
        return CACHE

    root = Path(sysconfig.get_paths()["purelib"])
    CACHE.parent.mkdir(parents=True, exist_ok=True)
    written = 0
    tmp = CACHE.with_suffix(".part")
    with tmp.open("w", encoding="utf-8") as out:
        for path, kind in _source_files(root):
            chunks = (
                _chunks_from_text(path.read_text(encoding="utf-8", errors="replace"))
                if kind == "text"
                else _chunks_from_python(path)
            )
            for chunk in chunks:
                out.write(chunk)
                out.write("\n")
                written += len(chunk) + 1
            if written >= target_bytes:
                break
    tmp.replace(CACHE)
    return CACHE
