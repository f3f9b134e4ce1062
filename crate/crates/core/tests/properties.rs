use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use dnbranch::branching::class_of;
use dnbranch::diagram::Dominance;
use dnbranch::prelude::*;

fn partition(max_parts: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn bipartition() -> impl Strategy<Value = Bipartition> {
    (partition(4, 4), partition(4, 4)).prop_map(|(a, b)| Bipartition::new(a, b))
}

fn sized_pair() -> impl Strategy<Value = (Bipartition, Bipartition)> {
    (0usize..=7).prop_flat_map(|n| {
        let all = Bipartition::all_of(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #[test]
    fn text_form_round_trips(b in bipartition()) {
        let text = b.to_string();
        prop_assert_eq!(text.parse::<Bipartition>().unwrap(), b);
    }

    #[test]
    fn hat_is_an_involution(b in bipartition()) {
        prop_assert_eq!(b.hat().hat(), b.clone());
        prop_assert_eq!(b.hat().size(), b.size());
    }

    #[test]
    fn remove_then_add_is_identity(b in bipartition()) {
        for node in b.removable_nodes() {
            let smaller = b.remove_node(&node).unwrap();
            prop_assert!(smaller.is_addable(&node));
            prop_assert_eq!(smaller.add_node(&node).unwrap(), b.clone());
        }
        for node in b.addable_nodes() {
            prop_assert_eq!(b.add_node(&node).unwrap().remove_node(&node).unwrap(), b.clone());
        }
    }

    #[test]
    fn dominance_is_antisymmetric((a, b) in sized_pair()) {
        let ab = a.dominance(&b).unwrap();
        let ba = b.dominance(&a).unwrap();
        let flipped = match ab {
            Dominance::GreaterEq => Dominance::LessEq,
            Dominance::LessEq => Dominance::GreaterEq,
            other => other,
        };
        prop_assert_eq!(ba, flipped);
        prop_assert_eq!(ab == Dominance::Equal, a == b);
    }

    #[test]
    fn dominance_is_transitive((a, b) in sized_pair(), seed in 0usize..1000) {
        let all = Bipartition::all_of(a.size());
        let c = &all[seed % all.len()];
        let geq = |x: &Bipartition, y: &Bipartition| {
            matches!(x.dominance(y).unwrap(), Dominance::GreaterEq | Dominance::Equal)
        };
        if geq(&a, &b) && geq(&b, c) {
            prop_assert!(geq(&a, c));
        }
    }
}

fn lattices() -> &'static [Lattice] {
    static CELL: OnceLock<Vec<Lattice>> = OnceLock::new();
    CELL.get_or_init(|| {
        ["4", "6", "inf"]
            .iter()
            .map(|e| Lattice::build(6, classify_regime(6, Modulus::parse_e(e).unwrap()).unwrap()).unwrap())
            .collect()
    })
}

/// Labels reached by removing each good node, computed separately for a
/// bipartition rather than for its label.
fn removal_classes(b: &Bipartition, lattice: &Lattice) -> BTreeSet<IrreducibleLabel> {
    let mut out = BTreeSet::new();
    for (node, _) in good_nodes(b, lattice.params()) {
        let mu = b.remove_node(&node).unwrap();
        match class_of(&mu, lattice).unwrap() {
            Some(label) => {
                out.insert(label);
            }
            None => {
                out.insert(IrreducibleLabel::split(mu.clone(), Sign::Plus));
                out.insert(IrreducibleLabel::split(mu, Sign::Minus));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn socle_of_lambda_equals_socle_of_its_image(which in 0usize..3, level in 2usize..=6, pick in 0usize..1000) {
        let lattice = &lattices()[which];
        let vertices = lattice.level(level);
        let lambda = &vertices[pick % vertices.len()];
        let image = involution(lambda, lattice).unwrap();
        let from_lambda = removal_classes(lambda, lattice);
        prop_assert_eq!(&from_lambda, &removal_classes(&image, lattice));
        if &image != lambda {
            let socle = socle_restriction(&label_for(lambda, None, lattice).unwrap(), lattice).unwrap();
            prop_assert_eq!(socle.summands.into_iter().collect::<BTreeSet<_>>(), from_lambda);
        }
    }
}
