use singquad::{example, run_sweep, ExampleId, ExampleParams, ExperimentRecord, SweepConfig};
use singquad_core::{predicted_order, SingularIntegrand};

fn cases() -> Vec<(String, SingularIntegrand)> {
    let mut out = Vec::new();
    for id in ExampleId::ALL {
        out.push((id.to_string(), example(id, &ExampleParams::default()).unwrap()));
    }
    for k in 0..=3 {
        let p = ExampleParams { k: Some(k), ..Default::default() };
        out.push((format!("2 k={k}"), example(ExampleId::PowerParity, &p).unwrap()));
    }
    let p = ExampleParams { variant: Some("f2".into()), ..Default::default() };
    out.push(("4 f2".into(), example(ExampleId::Logarithmic, &p).unwrap()));
    out.push(("power(-0.3,1,1.5)".into(), SingularIntegrand::power(-0.3, 1, 1.5).unwrap()));
    out.push(("powerlog(0.6,0,0.5)".into(), SingularIntegrand::power_log(0.6, 0, 0.5).unwrap()));
    out
}

fn sweep(f: &SingularIntegrand) -> Vec<ExperimentRecord> {
    run_sweep(&SweepConfig::new(f.clone()).with_range(50, 400)).unwrap()
}

#[test]
fn prediction_sign_matches_away_from_zeros() {
    for (name, f) in cases() {
        let higher = predicted_order(&f).higher_order;
        let recs = sweep(&f);
        let checked: Vec<&ExperimentRecord> =
            recs.iter().filter(|r| !r.at_floor && r.abs_error > 10.0 * higher.scale(r.n)).collect();
        let wrong = checked.iter().filter(|r| r.error.signum() != r.predicted.signum()).count();
        assert_eq!(wrong, 0, "{name}: {wrong} of {} records disagree in sign", checked.len());
    }
}

#[test]
fn correction_usually_helps() {
    for (name, f) in cases() {
        let recs: Vec<ExperimentRecord> = sweep(&f).into_iter().filter(|r| !r.at_floor).collect();
        if recs.is_empty() {
            continue;
        }
        let better = recs.iter().filter(|r| r.corrected_error.abs() <= r.abs_error).count();
        let share = better as f64 / recs.len() as f64;
        assert!(share >= 0.9, "{name}: correction helps in {:.1}% of {} records", 100.0 * share, recs.len());
    }
}
