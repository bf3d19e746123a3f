import time

import pytest


@pytest.fixture(scope="session")
def corpus_results():
    """The full brute-force corpus, run once and shared by the acceptance
    criteria that consume it (verdicts, coherence, derangement existence)."""
    from derangements.corpus import run_corpus

    t0 = time.time()
    results = run_corpus()
    elapsed = time.time() - t0
    return results, elapsed
