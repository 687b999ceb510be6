from os import path
from typing import List

fixtures_dir = path.join(path.dirname(__file__), "fixtures")


def fixture_lines(name: str) -> List[str]:
    """Lines of tests/fixtures/<name>.txt without '#' comment lines"""
    with open(path.join(fixtures_dir, f"{name}.txt"), encoding="utf-8") as fp:
        return [
            line.rstrip("\n")
            for line in fp
            if line.strip() and not line.startswith("#")
        ]


def fixture_text(name: str) -> str:
    return "\n".join(fixture_lines(name))
