"""Shared fixtures: synthetic corpora, hand-built models, trained-model caches.

Training fixtures are session-scoped because the first numba call pays a JIT
compilation cost; everything downstream reuses the same small models.
"""

from __future__ import annotations

import random

import numpy as np
import pytest

from topicmap import Document, EmbeddingModel, TrainParams, train

TOPIC_A = [f"a{i}" for i in range(1, 11)]
TOPIC_B = [f"b{i}" for i in range(1, 11)]


def make_two_topic_docs(
    n_docs: int = 1000, doc_len: int = 30, seed: int = 11
) -> list[Document]:
    """Half the documents draw only from TOPIC_A, half only from TOPIC_B."""
    rng = random.Random(seed)
    docs = []
    for i in range(n_docs):
        pool = TOPIC_A if i % 2 == 0 else TOPIC_B
        docs.append(Document(f"d{i}", rng.choices(pool, k=doc_len)))
    return docs


TWO_TOPIC_PARAMS = TrainParams(
    vector_size=48,
    context_size=5,
    epochs=5,
    negatives=5,
    subsample_t=0.0,  # a 20-term vocab would otherwise be subsampled away
    min_count=5,
    seed=7,
    workers=1,
)


@pytest.fixture(scope="session")
def two_topic_docs() -> list[Document]:
    return make_two_topic_docs()


@pytest.fixture(scope="session")
def two_topic_model(two_topic_docs) -> EmbeddingModel:
    return train(two_topic_docs, TWO_TOPIC_PARAMS)


def model_from_vectors(vectors: dict[str, list[float]]) -> EmbeddingModel:
    """Hand-built model with explicit vectors, counts all 1."""
    terms = list(vectors)
    mat = np.array([vectors[t] for t in terms], dtype=np.float32)
    return EmbeddingModel(terms, mat, counts=np.ones(len(terms), dtype=np.int64))


def random_model(n_terms: int, dim: int, seed: int = 0) -> EmbeddingModel:
    rng = np.random.default_rng(seed)
    terms = [f"t{i:04d}" for i in range(n_terms)]
    mat = rng.normal(size=(n_terms, dim)).astype(np.float32)
    counts = rng.integers(1, 1000, size=n_terms)
    return EmbeddingModel(terms, mat, counts=counts.astype(np.int64))


def exact_analogy_model(n_questions: int = 25) -> tuple[EmbeddingModel, str]:
    """Embedding where every question's answer is exact under b - a + c.

    Question i uses four basis-aligned terms in its own 4-dim block:
    a=e0, b=e1, c=e2 and d = (e1 - e0 + e2)/sqrt(3), so d is the unique
    cosine argmax of v(b) - v(a) + v(c).
    """
    dim = 4 * n_questions
    terms = []
    rows = []
    lines = [": exact"]
    for q in range(n_questions):
        base = 4 * q
        block = [f"w{base + j:04d}" for j in range(4)]
        terms.extend(block)
        for j in range(3):
            row = np.zeros(dim, dtype=np.float32)
            row[base + j] = 1.0
            rows.append(row)
        row = np.zeros(dim, dtype=np.float32)
        row[base + 0] = -1.0
        row[base + 1] = 1.0
        row[base + 2] = 1.0
        rows.append(row / np.sqrt(3.0))
        lines.append(" ".join(block))
    model = EmbeddingModel(terms, np.stack(rows))
    return model, "\n".join(lines) + "\n"
