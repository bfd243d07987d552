"""Figure rendering for batch reports."""

from satenv.plots import save_category_chart


def test_chart_file_written(tmp_path):
    counts = {
        "size": {"proof_found": 9, "step_limit": 4, "out_of_memory": 1, "timeout": 1},
        "age": {"proof_found": 7, "step_limit": 6, "out_of_memory": 1, "timeout": 1},
        "size_and_age": {"proof_found": 10, "step_limit": 5},
    }
    path = save_category_chart(counts, tmp_path / "outcomes.png")
    assert path.is_file()
    assert path.stat().st_size > 1000


def test_chart_with_extra_category(tmp_path):
    counts = {"age": {"proof_found": 1, "parse_error": 2}}
    path = save_category_chart(counts, tmp_path / "extra.png")
    assert path.is_file()
