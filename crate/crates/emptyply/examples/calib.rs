use emptyply::constructions::{abstract_family, Family};
use emptyply::search::*;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(7);
    let g = abstract_family(Family::Complete { n }).unwrap();
    let cfg = SearchConfig::default();
    let t = std::time::Instant::now();
    let r = optimize_empty_ply(&g, &cfg).unwrap();
    println!(
        "K{n}: status {:?} restart {} penalty {:.3e} elapsed {:.1}s trace head {:?}",
        r.status, r.restart_index, r.penalty, t.elapsed().as_secs_f64(),
        &r.trace[..r.trace.len().min(8)]
    );
}
