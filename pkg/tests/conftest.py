from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
JAVA_DIR = FIXTURES / "java"


@pytest.fixture
def java_sources():
    return {p.name: p.read_bytes() for p in sorted(JAVA_DIR.glob("*.java"))}


def write_corpus(root: Path, rows) -> Path:
    """rows: (author, project, role, relpath, bytes); returns the manifest path."""
    lines = []
    for author, project, role, rel, data in rows:
        target = root / rel
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
        lines.append(f"{author}\t{project}\t{role}\t{rel}\n")
    manifest = root / "manifest.tsv"
    manifest.write_text("".join(lines), encoding="utf-8")
    return manifest


@pytest.fixture
def six_file_corpus(tmp_path):
    rows = [
        ("alice", "a1", "train", "alice/a1/One.java", b"class AliceOne { int aaa = 1; }\n"),
        ("alice", "a1", "train", "alice/a1/Two.java", b"class AliceTwo { int aaa = 2; }\n"),
        ("alice", "a2", "test", "alice/a2/Three.java", b"class AliceThree { int aaa = 3; }\n"),
        ("bob", "b1", "train", "bob/b1/One.java", b"struct Zq { long zzz; }\n"),
        ("bob", "b1", "train", "bob/b1/Two.java", b"struct Zr { long zzz; }\n"),
        ("bob", "b2", "test", "bob/b2/Three.java", b"struct Zs { long zzz; }\n"),
    ]
    return write_corpus(tmp_path / "corpus", rows)


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(criterion: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
