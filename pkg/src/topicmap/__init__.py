"""Corpus-to-topic-map engine.

Train skip-gram word vectors on a corpus, build a pruned cosine-similarity
network over its most frequent terms, detect topic communities, and serve
the result to a browser explorer.
"""

from .clusters import CommunityAssignment, detect_communities
from .corpus import (
    DEFAULT_STOPWORDS,
    Document,
    Vocabulary,
    count_terms,
    detect_phrases,
    load_corpus,
    load_stopwords,
    make_documents,
    tokenize,
    top_terms,
)
from .embedding import (
    AnalogyReport,
    EmbeddingModel,
    SectionResult,
    TrainParams,
    evaluate_analogies,
    load_model,
    parse_questions,
    save_model,
    suggest_vector_size,
    train,
)
from .errors import (
    EmptyCorpusError,
    EmptyGraphError,
    EmptyInputError,
    FewerTermsThanRequested,
    InvalidParamsError,
    MalformedQuestionFileError,
    MissingVectorWarning,
    TopicMapError,
    UnknownTermError,
    ZeroVectorError,
)
from .mapbuilder import (
    Link,
    MapMeta,
    MapParams,
    TermGraph,
    TopicMap,
    build_complete_similarity,
    build_map,
    load_map,
    normalize,
    percentile_threshold,
    prune,
    save_map,
    serialize_map,
)
from .server import (
    ServeState,
    compound_neighbors,
    create_server,
    make_state,
    neighborhood,
)

__version__ = "0.1.0"

__all__ = [
    "AnalogyReport",
    "CommunityAssignment",
    "DEFAULT_STOPWORDS",
    "Document",
    "EmbeddingModel",
    "EmptyCorpusError",
    "EmptyGraphError",
    "EmptyInputError",
    "FewerTermsThanRequested",
    "InvalidParamsError",
    "Link",
    "MalformedQuestionFileError",
    "MapMeta",
    "MapParams",
    "MissingVectorWarning",
    "SectionResult",
    "ServeState",
    "TermGraph",
    "TopicMap",
    "TopicMapError",
    "TrainParams",
    "UnknownTermError",
    "Vocabulary",
    "ZeroVectorError",
    "build_complete_similarity",
    "build_map",
    "compound_neighbors",
    "count_terms",
    "create_server",
    "detect_communities",
    "detect_phrases",
    "evaluate_analogies",
    "load_corpus",
    "load_map",
    "load_model",
    "load_stopwords",
    "make_documents",
    "make_state",
    "neighborhood",
    "normalize",
    "parse_questions",
    "percentile_threshold",
    "prune",
    "save_map",
    "save_model",
    "serialize_map",
    "suggest_vector_size",
    "tokenize",
    "top_terms",
    "train",
]
