"""Train word vectors on a synthetic corpus and query them.

A quick tour of the embedding layer: we generate documents from three
themed vocabularies (cooking, sailing, astronomy) mixed with shared
filler words, train a small skip-gram model, and then poke at it with
similarity and nearest-neighbor queries. The themes are invented, so
the point is not linguistic insight but watching co-occurrence turn
into geometry: terms that share documents end up close, terms that
never meet end up far apart.

Run:  python3 demos/01_train_and_query.py
"""

import random

from topicmap import Document, TrainParams, suggest_vector_size, train

COOKING = ["oven", "butter", "flour", "simmer", "saucepan", "whisk", "dough", "season"]
SAILING = ["mast", "rudder", "harbor", "starboard", "mooring", "keel", "rigging", "tide"]
ASTRONOMY = ["nebula", "orbit", "telescope", "quasar", "parallax", "eclipse", "comet", "lens"]
FILLER = ["the", "and", "with", "very", "quite", "then", "also", "near"]


def make_corpus(n_docs: int = 900, seed: int = 3) -> list[Document]:
    rng = random.Random(seed)
    themes = [COOKING, SAILING, ASTRONOMY]
    docs = []
    for i in range(n_docs):
        theme = themes[i % 3]
        # ~2/3 theme words, ~1/3 filler, like topical text with glue words
        tokens = [
            rng.choice(theme) if rng.random() < 0.67 else rng.choice(FILLER)
            for _ in range(40)
        ]
        docs.append(Document(f"doc{i}", tokens))
    return docs


def main() -> None:
    docs = make_corpus()
    total_tokens = sum(len(d.tokens) for d in docs)
    print(f"corpus: {len(docs)} documents, {total_tokens} tokens")

    # The heuristic scales a known-good reference configuration to the
    # vocabulary size at hand. For a toy vocab it bottoms out at the floor.
    dim = suggest_vector_size(250, 167_000, 32)
    print(f"suggested vector size for this vocab: {dim}")

    params = TrainParams(
        vector_size=max(dim, 32),  # a little headroom over the floor
        context_size=5,
        epochs=5,
        min_count=5,
        subsample_t=0.0,  # tiny vocab, keep every occurrence
        seed=42,
        workers=1,
    )
    model = train(docs, params)
    print(f"trained: {len(model)} terms x {model.vector_size} dims\n")

    for probe in ("oven", "rudder", "telescope"):
        neighbors = model.nearest(probe, k=4)
        formatted = ", ".join(f"{t} ({s:.2f})" for t, s in neighbors)
        print(f"nearest to {probe!r}: {formatted}")

    print()
    same = model.similarity("butter", "flour")
    far = model.similarity("butter", "nebula")
    print(f"similarity(butter, flour)  = {same:+.3f}   (same theme)")
    print(f"similarity(butter, nebula) = {far:+.3f}   (different themes)")

    # Averaging unit vectors gives a cheap "concept between these words"
    # query; neighbors of the compound lean toward both inputs' theme.
    compound = model.compound(["orbit", "comet"])
    hits = model.nearest(compound, k=4, exclude=["orbit", "comet"])
    print("\nnearest to compound(orbit, comet):",
          ", ".join(f"{t} ({s:.2f})" for t, s in hits))


if __name__ == "__main__":
    main()
