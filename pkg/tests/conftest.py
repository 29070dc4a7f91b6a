import json

import pytest

from laddergb import QQ, ladder_from_json, verify_family
from corpus import CORPUS


def corpus_ladders():
    return [ladder_from_json(data) for data in CORPUS]


def corpus_ids():
    return [ladder_from_json(data).canon() for data in CORPUS]


@pytest.fixture(scope="session")
def corpus_reports():
    """verify_family over the whole corpus, computed once per session.

    Returns canon -> (report, chain, vd_certificate).
    """
    out = {}
    for data in CORPUS:
        top = ladder_from_json(data)
        out[top.canon()] = verify_family(top, QQ)
    return out


def write_instance(tmp_path, data, name="instance.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)
