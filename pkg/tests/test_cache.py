import logging
import os

import pytest

from stacksorting.cache import ResultCache, code_version, default_cache_dir


def test_env_override(cache_dir):
    assert default_cache_dir() == cache_dir


def test_round_trip(tmp_path):
    c = ResultCache(tmp_path)
    k = c.key("sequence", {"n_max": 5})
    assert c.get(k) is None
    c.put(k, [1, 2, 3])
    assert c.get(k) == [1, 2, 3]
    assert c.key("sequence", {"n_max": 5}) == k != c.key("sequence", {"n_max": 6})
    assert len(code_version()) == 16


def test_corruption_is_detected_and_recomputed(tmp_path, caplog):
    c = ResultCache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return {"v": 42}

    assert c.fetch("x", {}, compute) == {"v": 42}
    path = tmp_path / f"{c.key('x', {})}.json"
    path.write_text(path.read_text().replace("42", "43"))
    with caplog.at_level(logging.WARNING):
        assert c.fetch("x", {}, compute) == {"v": 42}
    assert "corrupt" in caplog.text
    assert len(calls) == 2
    assert c.fetch("x", {}, compute) == {"v": 42}
    assert len(calls) == 2


def test_no_temp_files_left(tmp_path):
    c = ResultCache(tmp_path)
    for i in range(5):
        c.put(c.key("y", {"i": i}), i)
    assert not [f for f in os.listdir(tmp_path) if f.startswith(".tmp-")]


def test_failed_write_leaves_old_entry(tmp_path):
    c = ResultCache(tmp_path)
    k = c.key("z", {})
    c.put(k, 1)
    with pytest.raises(TypeError):
        c.put(k, object())
    assert c.get(k) == 1
    assert not [f for f in os.listdir(tmp_path) if f.startswith(".tmp-")]


def test_disabled(tmp_path):
    c = ResultCache(tmp_path / "off", enabled=False)
    c.put("k", 1)
    assert c.get("k") is None
    assert not (tmp_path / "off").exists()
