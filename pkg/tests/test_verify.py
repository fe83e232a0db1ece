from deltoid import verify


def test_registry_names_unique_and_grouped():
    prefixes = {name.split(".")[0] for name in verify.REGISTRY}
    assert prefixes == {"core", "triangle", "power", "loci"}


def test_report_covers_every_check():
    report = verify.run(verify.VerifyConfig(samples=50))
    assert [r.name for r in report.rows] == list(verify.REGISTRY)
    assert report.passed, report.format()


def test_zero_tolerance_reports_failures():
    report = verify.run(verify.VerifyConfig(samples=50, tol_override=0.0, only=["core.", "power."]))
    failed = [r for r in report.rows if not r.passed]
    assert failed and not report.passed
    assert all(r.residual > 0 and r.tolerance == 0 for r in failed)
    assert "FAIL" in report.format()


def test_seeded_runs_repeat():
    a = verify.run_check("triangle.roundtrip_vertices", seed=3, samples=100)
    b = verify.run_check("triangle.roundtrip_vertices", seed=3, samples=100)
    assert a == b


def test_sample_scaling():
    ctx = verify.make_context("x", 0, 100)
    assert ctx.count(1000) == 100 and ctx.count(10) == 4
