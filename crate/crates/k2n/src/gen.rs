//! Named graph families for `k2n gen`.

use k2n_core::fanstrip::{make_fan, make_j, random_augmentation, random_strip, regular_strip};
use k2n_core::standard::{complete, complete_bipartite, k33_minus_e, k4_minus_e, petersen, prism, try_cycle, wheel};
use k2n_core::typeone::random_type_one;
use k2n_core::{Error, Graph, Result};

pub const FAMILIES: &[(&str, &str)] = &[
    ("cycle", "k"),
    ("complete", "k"),
    ("complete-bipartite", "a b"),
    ("wheel", "rim"),
    ("k4e", ""),
    ("k33e", ""),
    ("prism", ""),
    ("petersen", ""),
    ("fan", "length [subdivision per rim edge...]"),
    ("strip", "p q (random, uses --seed)"),
    ("regular-strip", "pieces"),
    ("J", "a b"),
    ("type1-random", "vertices (uses --seed)"),
    ("augmentation", "max-base (uses --seed)"),
];

fn arg(params: &[usize], i: usize, family: &str) -> Result<usize> {
    params
        .get(i)
        .copied()
        .ok_or_else(|| Error::InvalidParam(format!("{family} needs parameter {}", i + 1)))
}

fn exactly(params: &[usize], k: usize, family: &str) -> Result<()> {
    if params.len() != k {
        return Err(Error::InvalidParam(format!("{family} takes {k} parameter(s), got {}", params.len())));
    }
    Ok(())
}

pub fn generate(family: &str, params: &[usize], seed: u64) -> Result<Graph> {
    let f = family;
    match family.to_ascii_lowercase().as_str() {
        "cycle" => {
            exactly(params, 1, f)?;
            try_cycle(params[0])
        }
        "complete" => {
            exactly(params, 1, f)?;
            Ok(complete(params[0]))
        }
        "complete-bipartite" | "kbip" => {
            exactly(params, 2, f)?;
            Ok(complete_bipartite(params[0], params[1]))
        }
        "wheel" => {
            exactly(params, 1, f)?;
            wheel(params[0])
        }
        "k4e" => {
            exactly(params, 0, f)?;
            Ok(k4_minus_e())
        }
        "k33e" => {
            exactly(params, 0, f)?;
            Ok(k33_minus_e())
        }
        "prism" => {
            exactly(params, 0, f)?;
            Ok(prism())
        }
        "petersen" => {
            exactly(params, 0, f)?;
            Ok(petersen())
        }
        "fan" => Ok(make_fan(arg(params, 0, f)?, &params[1..])?.graph),
        "strip" => {
            exactly(params, 2, f)?;
            Ok(random_strip(params[0], params[1], seed)?.graph)
        }
        "regular-strip" => {
            exactly(params, 1, f)?;
            Ok(regular_strip(params[0])?.graph)
        }
        "j" => {
            exactly(params, 2, f)?;
            make_j(params[0], params[1])
        }
        "type1-random" => {
            exactly(params, 1, f)?;
            random_type_one(params[0], seed)?.graph()
        }
        "augmentation" => {
            exactly(params, 1, f)?;
            random_augmentation(params[0], seed)?.augment()
        }
        _ => Err(Error::InvalidParam(format!("unknown family {family:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_generates() {
        let samples: &[(&str, &[usize])] = &[
            ("cycle", &[5]),
            ("complete", &[4]),
            ("complete-bipartite", &[2, 3]),
            ("wheel", &[5]),
            ("k4e", &[]),
            ("k33e", &[]),
            ("prism", &[]),
            ("petersen", &[]),
            ("fan", &[3]),
            ("strip", &[4, 4]),
            ("regular-strip", &[3]),
            ("J", &[1, 4]),
            ("type1-random", &[9]),
            ("augmentation", &[5]),
        ];
        assert_eq!(samples.len(), FAMILIES.len());
        for (f, p) in samples {
            assert!(generate(f, p, 1).is_ok(), "{f}");
        }
        assert!(generate("cycle", &[], 0).is_err());
        assert!(generate("nope", &[], 0).is_err());
    }
}
