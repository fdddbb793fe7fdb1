import pytest

from polaris import bundled_corpora_dir, load_bundle, seed_lexicon_dir


@pytest.fixture(scope="session")
def bundle():
    return load_bundle(seed_lexicon_dir())


@pytest.fixture(scope="session")
def corpora_dir():
    return bundled_corpora_dir()
