from pathlib import Path
from typing import Callable

import pytest


@pytest.fixture
def corpus_file(tmp_path: Path) -> Callable[[str], Path]:
    def write(text: str) -> Path:
        corpus: Path = tmp_path / "corpus.txt"
        corpus.write_text(text)

        return corpus

    return write
