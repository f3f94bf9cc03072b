import pytest

from clozecraft.annotate import get_annotator
from clozecraft.catalog import Catalog
from clozecraft.generator import GrammarItemGenerator, ItemPipeline
from clozecraft.scoring import MaskedLM, bundled_model


class ScriptedScorer(MaskedLM):
    """Test double: every word is in-vocabulary unless listed in ``oov``;
    scores come from a ``(query, candidate) -> float`` function or a plain
    ``{candidate: score}`` table."""

    def __init__(self, table=None, score_fn=None, oov=()):
        self.table = dict(table or {})
        self.score_fn = score_fn
        self.oov = set(oov)

    def _known(self, word: str) -> bool:
        return word not in self.oov

    def _score(self, query):
        if self.score_fn is not None:
            return {c: self.score_fn(query, c) for c in query.candidates}
        return {c: self.table.get(c, -100.0) for c in query.candidates}


@pytest.fixture(scope="session")
def annotator():
    return get_annotator()


@pytest.fixture(scope="session")
def catalog():
    return Catalog.load()


@pytest.fixture(scope="session")
def scorer():
    return bundled_model()


@pytest.fixture(scope="session")
def pipeline(catalog, scorer):
    return ItemPipeline(catalog, scorer)


@pytest.fixture(scope="session")
def generator():
    return GrammarItemGenerator().fit()


@pytest.fixture(scope="session")
def corpus_lines():
    from importlib import resources

    text = (resources.files("clozecraft.data") / "corpus.txt").read_text("utf-8")
    return [line.strip() for line in text.splitlines() if line.strip()]
