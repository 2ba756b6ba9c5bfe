//! parse(render(F)) = F over randomly generated families.

use proptest::collection::vec;
use proptest::option;
use proptest::prelude::*;

use brim::{IdealFamily, Monomial, MonomialIdeal};
use brim_cli::family_file::{parse_family, render_family};

fn arb_named_family() -> impl Strategy<Value = (IdealFamily, Vec<Option<String>>)> {
    (1usize..=3).prop_flat_map(|dim| {
        let ideal = (vec(1u64..=4, dim), vec(vec(0u64..=3, dim), 0..3)).prop_map(
            move |(pure, extras)| {
                let mut gens: Vec<Monomial> = pure
                    .iter()
                    .enumerate()
                    .map(|(axis, &e)| {
                        let mut exps = vec![0; dim];
                        exps[axis] = e;
                        Monomial::new(exps)
                    })
                    .collect();
                for exps in extras {
                    if exps.iter().any(|&e| e > 0) {
                        gens.push(Monomial::new(exps));
                    }
                }
                MonomialIdeal::new(dim, gens).expect("well-formed")
            },
        );
        vec((ideal, option::of("[a-z]{1,8}")), 1..=3).prop_map(|members| {
            let (ideals, names): (Vec<_>, Vec<_>) = members.into_iter().unzip();
            (
                IdealFamily::new(ideals).expect("m-primary members"),
                names,
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parse_inverts_render((family, names) in arb_named_family()) {
        let rendered = render_family(&family, &names);
        let parsed = parse_family(&rendered, false).unwrap();
        prop_assert_eq!(&parsed.family, &family);
        prop_assert_eq!(&parsed.names, &names);
        // idempotence of the canonical form
        prop_assert_eq!(render_family(&parsed.family, &parsed.names), rendered);
    }
}
