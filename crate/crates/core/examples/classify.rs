//! Balance and the KS-partitions of a few split graphs.

use splitkit::classify::{
    balance_split, k_max_partitions, omega_alpha, s_max_partitions, trichotomy,
};
use splitkit::model::Graph;

fn main() -> Result<(), splitkit::Error> {
    let graphs = [
        ("P4", Graph::path(4)),
        ("K(1,3)", Graph::star(3)),
        ("K4", Graph::complete(4)),
    ];
    for (name, g) in graphs {
        let oa = omega_alpha(&g)?;
        println!(
            "{name}: omega={} alpha={} {}",
            oa.omega,
            oa.alpha,
            balance_split(&g)?
        );
        for (kind, parts) in [
            ("S-max", s_max_partitions(&g)?),
            ("K-max", k_max_partitions(&g)?),
        ] {
            for p in parts {
                let case = trichotomy(&g, &p)?.case;
                println!(
                    "  {kind} K={:?} S={:?} {:?}",
                    p.k_vertices(),
                    p.s_vertices(),
                    case
                );
            }
        }
    }
    Ok(())
}
