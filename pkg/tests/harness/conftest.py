import pytest

BOWTIE = "# bowtie\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n"


@pytest.fixture
def bowtie_file(tmp_path):
    path = tmp_path / "bowtie.tsv"
    path.write_text(BOWTIE)
    return str(path)


@pytest.fixture
def path_file(tmp_path):
    path = tmp_path / "path.tsv"
    path.write_text("1 2\n2 3\n3 4\n")
    return str(path)
