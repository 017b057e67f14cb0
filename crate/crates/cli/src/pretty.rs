//! Human-readable renderings behind `--pretty`.

use std::fmt::Write;

use cubix::fields::Field;
use cubix::report::OrbitReport;
use cubix::verify::{OrbitCensus, TrialReport};

fn opt(s: &Option<String>) -> &str {
    s.as_deref().unwrap_or("-")
}

pub fn orbit<F: Field>(r: &OrbitReport<F>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cubic      {}", r.cubic);
    let _ = writeln!(out, "stratum    {}", r.stratum);
    let _ = writeln!(out, "Q_n        {}", r.qn);
    let _ = writeln!(out, "q          {}", opt(&r.q));
    if let Some(e) = &r.extension {
        let _ = writeln!(out, "extension  {e}");
    }
    let _ = writeln!(
        out,
        "invariant  q = {}, cube class = {}",
        opt(&r.invariant.q),
        opt(&r.invariant.cube_class)
    );
    let _ = write!(out, "reducible  {}", r.reducible);
    out
}

pub fn census(c: &OrbitCensus) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "census over F_{} (|Sl(2,{})| = {})", c.p, c.p, c.sl_order);
    let _ = writeln!(
        out,
        "{:<40} {:>6} {:>6} {:<17} {:>3}  invariant",
        "representative", "size", "stab", "stratum", "gl"
    );
    for o in &c.orbits {
        let _ = writeln!(
            out,
            "{:<40} {:>6} {:>6} {:<17} {:>3}  {}",
            o.representative.to_string(),
            o.size,
            o.stabilizer,
            o.stratum,
            o.gl_orbit,
            o.invariant
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<17} {:>7} {:>9} {:>9}", "stratum", "cubics", "Sl-orbits", "Gl-orbits");
    for (name, s) in &c.strata {
        let _ = writeln!(out, "{name:<17} {:>7} {:>9} {:>9}", s.cubics, s.sl_orbits, s.gl_orbits);
    }
    let t = &c.totals;
    let _ = writeln!(
        out,
        "\nnonzero discriminant: {} Sl-orbits, {} Gl-orbits",
        t.sl_nonzero_disc, t.gl_nonzero_disc
    );
    let ok = if c.checks.all() { "all passed" } else { "FAILED" };
    let _ = write!(out, "consistency checks: {ok}");
    out
}

pub fn trials(r: &TrialReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verify over {} (seed {}, {} trials)", r.field, r.seed, r.trials);
    for i in &r.identities {
        let status = if i.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status}  {:<24} {} run, {} skipped, {} failed",
            i.identity,
            i.trials - i.skipped,
            i.skipped,
            i.failures.len()
        );
        for w in i.failures.iter().take(5) {
            let _ = writeln!(out, "      {w}");
        }
    }
    let _ = write!(out, "elapsed {} ms", r.elapsed_ms);
    out
}
