//! Level-one calibration: the same signature rule on single partitions
//! produces exactly the e-restricted partitions.

use dnbranch::crystal::level_one::level_one_levels;
use dnbranch::diagram::Partition;

fn main() {
    for e in [2u32, 3, 4] {
        let levels = level_one_levels(10, e);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        let direct: Vec<usize> = (0..=10)
            .map(|m| Partition::all_of(m).iter().filter(|p| p.is_restricted(Some(e))).count())
            .collect();
        println!("e={e}: generated {counts:?}");
        println!("     restricted {direct:?}");
        assert_eq!(counts, direct);
    }
}
