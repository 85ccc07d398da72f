"""Skip-gram word vectors: training, similarity queries, analogy evaluation.

Training follows the classic skip-gram-with-negative-sampling recipe: dynamic
context windows (radius uniform in [1, C] per position), frequent-word
subsampling, negatives drawn from the unigram distribution raised to 3/4, and
a learning rate decaying linearly to 1/10^4 of its initial value over all
training positions. The input-side vectors are the model.

All query operations (similarity, nearest, compound, analogies) work on
unit-normalized vectors in double precision and are read-only, so a trained
or loaded model can serve unlimited concurrent callers.
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ._sgns import train_worker
from .corpus import Document, Vocabulary, tokenize
from .errors import (
    EmptyCorpusError,
    InvalidParamsError,
    MalformedQuestionFileError,
    UnknownTermError,
    ZeroVectorError,
)


@dataclass(frozen=True)
class TrainParams:
    """Knobs for skip-gram training.

    ``vector_size``/``context_size``/``epochs`` are the primary quality
    levers; the rest are canonical defaults that rarely need touching.
    """

    vector_size: int = 250
    context_size: int = 12
    epochs: int = 5
    negatives: int = 5
    subsample_t: float = 1e-4
    initial_lr: float = 0.025
    min_count: int = 5
    seed: int = 1
    workers: int = 1

    def __post_init__(self):
        if self.vector_size < 1:
            raise InvalidParamsError("vector_size must be >= 1")
        if self.context_size < 1:
            raise InvalidParamsError("context_size must be >= 1")
        if self.epochs < 1:
            raise InvalidParamsError("epochs must be >= 1")
        if self.negatives < 0:
            raise InvalidParamsError("negatives must be >= 0")
        if not self.initial_lr > 0:
            raise InvalidParamsError("initial_lr must be > 0")
        if self.subsample_t < 0:
            raise InvalidParamsError("subsample_t must be >= 0")
        if self.min_count < 1:
            raise InvalidParamsError("min_count must be >= 1")
        if self.workers < 1:
            raise InvalidParamsError("workers must be >= 1")


class EmbeddingModel:
    """Term -> vector lookup plus cosine-space queries.

    ``vectors`` is the (n_terms, vector_size) float32 matrix in canonical
    term order (descending count, ties lexicographic). ``counts`` and
    ``params`` are absent on models loaded from plain vector files.
    """

    def __init__(
        self,
        terms: Sequence[str],
        vectors: np.ndarray,
        counts: np.ndarray | None = None,
        params: TrainParams | None = None,
        total_tokens: int = 0,
        total_documents: int = 0,
    ):
        if vectors.ndim != 2 or len(terms) != vectors.shape[0]:
            raise InvalidParamsError("one vector per term required")
        if not np.isfinite(vectors).all():
            raise InvalidParamsError("vectors must be finite")
        self.terms = list(terms)
        self.vectors = np.ascontiguousarray(vectors, dtype=np.float32)
        self.counts = None if counts is None else np.asarray(counts, dtype=np.int64)
        self.params = params
        self.total_tokens = total_tokens
        self.total_documents = total_documents
        self._index = {t: i for i, t in enumerate(self.terms)}
        if len(self._index) != len(self.terms):
            raise InvalidParamsError("duplicate terms")
        self._unit: np.ndarray | None = None
        self._lexrank: np.ndarray | None = None
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self._index

    @property
    def vector_size(self) -> int:
        return self.vectors.shape[1]

    @property
    def vocab(self) -> Vocabulary | None:
        """Term counts as a Vocabulary, when counts are known."""
        if self.counts is None:
            return None
        return Vocabulary(
            entries={t: int(c) for t, c in zip(self.terms, self.counts)},
            total_tokens=self.total_tokens,
            total_documents=self.total_documents,
        )

    def _require(self, term: str) -> int:
        idx = self._index.get(term)
        if idx is None:
            raise UnknownTermError(term)
        return idx

    @property
    def unit_matrix(self) -> np.ndarray:
        """Unit-normalized vectors, float64, rows aligned with ``terms``."""
        if self._unit is None:
            with self._lock:
                if self._unit is None:
                    m = self.vectors.astype(np.float64)
                    norms = np.linalg.norm(m, axis=1, keepdims=True)
                    norms[norms == 0.0] = 1.0
                    self._unit = m / norms
        return self._unit

    @property
    def lexranks(self) -> np.ndarray:
        """Rank of each term in lexicographic order (tie-break key)."""
        if self._lexrank is None:
            with self._lock:
                if self._lexrank is None:
                    order = sorted(range(len(self.terms)), key=self.terms.__getitem__)
                    ranks = np.empty(len(order), dtype=np.int64)
                    for rank, idx in enumerate(order):
                        ranks[idx] = rank
                    self._lexrank = ranks
        return self._lexrank

    def unit_vector(self, term: str) -> np.ndarray:
        return self.unit_matrix[self._require(term)]

    def similarity(self, t1: str, t2: str) -> float:
        """Cosine of the two term vectors, in [-1, 1]."""
        u = self.unit_matrix
        sim = float(u[self._require(t1)] @ u[self._require(t2)])
        return max(-1.0, min(1.0, sim))

    def nearest(
        self,
        query: str | np.ndarray,
        k: int,
        exclude: Iterable[str] = (),
    ) -> list[tuple[str, float]]:
        """Top-k terms by cosine to ``query`` (a vocab term or a raw vector).

        Descending similarity, ties broken lexicographically; the query term
        itself and any ``exclude`` terms are omitted.
        """
        if k < 1:
            raise InvalidParamsError("k must be >= 1")
        excluded = set(exclude)
        if isinstance(query, str):
            q = self.unit_vector(query)
            excluded.add(query)
        else:
            q = np.asarray(query, dtype=np.float64)
            if q.shape != (self.vector_size,):
                raise InvalidParamsError(
                    f"query vector must have length {self.vector_size}"
                )
            norm = float(np.linalg.norm(q))
            if norm < 1e-12:
                raise ZeroVectorError("query vector has zero norm")
            q = q / norm
        sims = self.unit_matrix @ q
        return self._rank(sims, k, excluded)

    def _rank(
        self, sims: np.ndarray, k: int, excluded: set[str]
    ) -> list[tuple[str, float]]:
        n = sims.shape[0]
        need = min(n, k + len(excluded))
        if need < n:
            part = np.argpartition(-sims, need - 1)[:need]
            kth = sims[part].min()
            cand = np.flatnonzero(sims >= kth)
        else:
            cand = np.arange(n)
        order = cand[np.lexsort((self.lexranks[cand], -sims[cand]))]
        out: list[tuple[str, float]] = []
        for idx in order:
            term = self.terms[idx]
            if term in excluded:
                continue
            out.append((term, float(max(-1.0, min(1.0, sims[idx])))))
            if len(out) == k:
                break
        return out

    def compound(self, terms: Sequence[str]) -> np.ndarray:
        """Unit mean of the unit vectors of ``terms`` (float64).

        Raises ZeroVectorError when the members cancel out.
        """
        if not terms:
            raise InvalidParamsError("terms must be non-empty")
        rows = [self._require(t) for t in terms]
        mean = self.unit_matrix[rows].mean(axis=0)
        norm = float(np.linalg.norm(mean))
        if norm < 1e-12:
            raise ZeroVectorError(f"compound of {list(terms)} has zero norm")
        return mean / norm


def _canonical_term_order(counts: Counter[str], min_count: int) -> list[str]:
    kept = [(t, c) for t, c in counts.items() if c >= min_count]
    kept.sort(key=lambda kv: (-kv[1], kv[0]))
    return [t for t, _ in kept]


def train(documents: Sequence[Document], params: TrainParams | None = None) -> EmbeddingModel:
    """Train skip-gram vectors on tokenized documents.

    Raises EmptyCorpusError when nothing survives min-count filtering.
    Bit-reproducible for a fixed seed with ``workers=1``; with more workers
    the parameter matrices are shared without locks and results vary run to
    run (statistically equivalent, per the usual asynchronous SGD argument).
    """
    params = params or TrainParams()
    counts: Counter[str] = Counter()
    for doc in documents:
        counts.update(doc.tokens)
    total_tokens = sum(counts.values())
    terms = _canonical_term_order(counts, params.min_count)
    if not terms:
        raise EmptyCorpusError(
            f"no terms with count >= {params.min_count} "
            f"({total_tokens} tokens in {len(documents)} documents)"
        )
    index = {t: i for i, t in enumerate(terms)}
    term_counts = np.array([counts[t] for t in terms], dtype=np.int64)
    in_vocab_total = int(term_counts.sum())

    if params.subsample_t > 0:
        # keep = sqrt(t/f) + t/f, the canonical discounting of frequent words
        ratio = params.subsample_t * in_vocab_total / term_counts
        keep_prob = np.minimum(1.0, np.sqrt(ratio) + ratio)
    else:
        keep_prob = np.ones(len(terms), dtype=np.float64)
    neg_cum = np.cumsum(term_counts.astype(np.float64) ** 0.75)

    encoded = []
    max_len = 1
    for doc in documents:
        ids = [index[t] for t in doc.tokens if t in index]
        if ids:
            encoded.append(np.array(ids, dtype=np.int32))
            max_len = max(max_len, len(ids))
    if not encoded:
        raise EmptyCorpusError("corpus empty after vocabulary filtering")

    rng = np.random.default_rng(params.seed)
    dim = params.vector_size
    syn0 = (rng.random((len(terms), dim), dtype=np.float32) - 0.5) / dim
    syn1neg = np.zeros((len(terms), dim), dtype=np.float32)

    def shard_args(worker: int):
        docs = encoded[worker :: params.workers]
        flat = np.concatenate(docs) if docs else np.empty(0, dtype=np.int32)
        starts = np.zeros(len(docs) + 1, dtype=np.int64)
        if docs:
            starts[1:] = np.cumsum([len(d) for d in docs])
        seed = np.uint64((params.seed + 0x9E3779B9 * worker) & 0xFFFFFFFFFFFFFFFF)
        return (
            syn0,
            syn1neg,
            flat,
            starts,
            keep_prob,
            neg_cum,
            np.int64(params.context_size),
            np.int64(params.negatives),
            float(params.initial_lr),
            np.int64(params.epochs),
            seed,
            np.empty(max_len, dtype=np.int32),
        )

    if params.workers == 1:
        train_worker(*shard_args(0))
    else:
        threads = [
            threading.Thread(target=train_worker, args=shard_args(w))
            for w in range(params.workers)
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

    return EmbeddingModel(
        terms,
        syn0,
        counts=term_counts,
        params=params,
        total_tokens=total_tokens,
        total_documents=len(documents),
    )


def save_model(model: EmbeddingModel, path: str | Path) -> None:
    """Write the model as text: header line "n dim", then term + values.

    Values carry 9 significant digits, which round-trips float32 exactly:
    save(load(f)) reproduces f byte for byte.
    """
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{len(model)} {model.vector_size}\n")
        for term, row in zip(model.terms, model.vectors):
            fh.write(term)
            for x in row:
                fh.write(f" {float(x):.9g}")
            fh.write("\n")


def load_model(path: str | Path) -> EmbeddingModel:
    """Read a text-format vector file (no counts or training metadata)."""
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError(f"{path}: malformed header line")
        n, dim = int(header[0]), int(header[1])
        terms: list[str] = []
        vectors = np.empty((n, dim), dtype=np.float32)
        for i in range(n):
            parts = fh.readline().split()
            if len(parts) != dim + 1:
                raise ValueError(f"{path}: line {i + 2}: expected {dim + 1} fields")
            terms.append(parts[0])
            vectors[i] = [float(x) for x in parts[1:]]
    return EmbeddingModel(terms, vectors)


@dataclass
class SectionResult:
    name: str
    correct: int = 0
    attempted: int = 0
    skipped: int = 0

    @property
    def accuracy(self) -> float:
        return self.correct / self.attempted if self.attempted else 0.0


@dataclass
class AnalogyReport:
    sections: list[SectionResult] = field(default_factory=list)

    @property
    def correct(self) -> int:
        return sum(s.correct for s in self.sections)

    @property
    def attempted(self) -> int:
        return sum(s.attempted for s in self.sections)

    @property
    def skipped(self) -> int:
        return sum(s.skipped for s in self.sections)

    @property
    def accuracy(self) -> float:
        return self.correct / self.attempted if self.attempted else 0.0

    def format_report(self) -> str:
        lines = [
            f"section {s.name}: accuracy {s.accuracy:.4f} "
            f"({s.correct}/{s.attempted}) skipped {s.skipped}"
            for s in self.sections
        ]
        lines.append(
            f"total {self.accuracy:.4f} ({self.correct}/{self.attempted}) "
            f"attempted {self.attempted} skipped {self.skipped}"
        )
        return "\n".join(lines)


def _normalize_question_word(word: str) -> str:
    toks = tokenize(word)
    return toks[0] if len(toks) == 1 else word.lower()


def parse_questions(
    source: str | Path | Iterable[str],
) -> list[tuple[str, tuple[str, str, str, str]]]:
    """Parse an analogy question file into (section, (a, b, c, d)) rows.

    Lines starting with ": " open a named section; every other non-empty line
    must hold exactly four whitespace-separated words. Words are normalized
    the same way the tokenizer normalizes corpus text.
    """
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text(encoding="utf-8").splitlines()
    else:
        lines = list(source)
    questions = []
    section = "all"
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        if line.startswith(": "):
            section = line[2:].strip() or "all"
            continue
        words = line.split()
        if len(words) != 4:
            raise MalformedQuestionFileError(
                f"expected 4 words, got {len(words)}", lineno
            )
        a, b, c, d = (_normalize_question_word(w) for w in words)
        questions.append((section, (a, b, c, d)))
    return questions


def evaluate_analogies(
    model: EmbeddingModel,
    questions: str | Path | Iterable[str],
    chunk_size: int = 256,
) -> AnalogyReport:
    """Score a-is-to-b-as-c-is-to-? predictions over a question file.

    The predicted term maximizes cosine to v(b) - v(a) + v(c) (unit inputs)
    over the vocabulary minus {a, b, c}; questions containing any
    out-of-vocabulary word are skipped and counted per section.
    """
    parsed = parse_questions(questions)
    sections: dict[str, SectionResult] = {}
    order: list[str] = []
    rows: dict[str, list[tuple[int, int, int, int]]] = {}
    index = model._index
    for section, (a, b, c, d) in parsed:
        if section not in sections:
            sections[section] = SectionResult(section)
            rows[section] = []
            order.append(section)
        ids = tuple(index.get(w, -1) for w in (a, b, c, d))
        if -1 in ids:
            sections[section].skipped += 1
        else:
            rows[section].append(ids)

    unit = model.unit_matrix
    for section in order:
        ids = rows[section]
        res = sections[section]
        for start in range(0, len(ids), chunk_size):
            chunk = np.array(ids[start : start + chunk_size], dtype=np.int64)
            a, b, c, d = chunk.T
            query = unit[b] - unit[a] + unit[c]
            sims = query @ unit.T
            r = np.arange(chunk.shape[0])
            sims[r, a] = -np.inf
            sims[r, b] = -np.inf
            sims[r, c] = -np.inf
            pred = sims.argmax(axis=1)
            res.correct += int((pred == d).sum())
            res.attempted += chunk.shape[0]
    return AnalogyReport([sections[name] for name in order])


def suggest_vector_size(ref_v: int, ref_vocab_size: int, vocab_size: int) -> int:
    """Scale a reference vector size to a new vocabulary size.

    Keeps vector_size^2 / vocab_size roughly constant:
    round(ref_v * sqrt(vocab_size / ref_vocab_size)), floored at 10.
    """
    if ref_v < 1 or ref_vocab_size < 1 or vocab_size < 1:
        raise InvalidParamsError("all arguments must be >= 1")
    return max(10, round(ref_v * math.sqrt(vocab_size / ref_vocab_size)))
