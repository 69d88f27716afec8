from refpoly.plotting import plot_lambda_indices, plot_polygon_gallery
from refpoly.polygons import enumerate_reflexive_polygons
from refpoly.verify import standard_corpus, verify_corpus


def test_gallery(tmp_path):
    path = plot_polygon_gallery(enumerate_reflexive_polygons(), tmp_path / "g.png")
    assert path.read_bytes()[:4] == b"\x89PNG"


def test_lambda_plot(tmp_path):
    reports = verify_corpus(standard_corpus(3)[:20], lemmas=False)
    path = plot_lambda_indices(reports, tmp_path / "l.pdf")
    assert path.stat().st_size > 0 and path.read_bytes()[:4] == b"%PDF"
