#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roughdial::{ApproximationSpace, Subset, Universe};

pub const SEED: u64 = 0x5eed_2024;

pub fn example_space() -> ApproximationSpace {
    let u = Universe::from_chars("abcefq").unwrap();
    ApproximationSpace::from_pairs(u, &[("a", "b"), ("b", "c"), ("e", "f")]).unwrap()
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// A random partition of `n` atoms named `a`, `b`, ...
pub fn random_space(rng: &mut impl Rng, n: usize) -> ApproximationSpace {
    let names: String = (b'a'..).take(n).map(char::from).collect();
    let u = Universe::from_chars(&names).unwrap();
    let nblocks = rng.gen_range(1..=n);
    let mut labels: Vec<usize> = (0..n).map(|i| if i < nblocks { i } else { rng.gen_range(0..nblocks) }).collect();
    labels.shuffle(rng);
    let blocks = (0..nblocks)
        .map(|b| (0..n).filter(|&i| labels[i] == b).fold(u.empty(), |s, i| s.with(i)))
        .collect();
    ApproximationSpace::from_partition(u, blocks).unwrap()
}

/// The twenty seeded spaces used by the suites, `|S|` between 1 and 6.
pub fn seeded_spaces() -> Vec<ApproximationSpace> {
    let mut r = rng(3);
    (0..20).map(|i| random_space(&mut r, 1 + i % 6)).collect()
}

/// Lower and upper approximation straight from the definition, ignoring
/// the library's own operators.
pub fn oracle_bounds(space: &ApproximationSpace, x: Subset) -> (Subset, Subset) {
    let u = space.universe();
    let mut lo = u.empty();
    let mut up = u.empty();
    for i in 0..u.len() {
        let block: Vec<usize> = (0..u.len()).filter(|&j| space.block_of(i).contains(j)).collect();
        if block.iter().all(|&j| x.contains(j)) {
            lo = lo.with(i);
        }
        if block.iter().any(|&j| x.contains(j)) {
            up = up.with(i);
        }
    }
    (lo, up)
}

/// Nonempty subsets grouped by their oracle bounds.
pub fn oracle_classes(space: &ApproximationSpace) -> Vec<Vec<Subset>> {
    let mut groups: std::collections::BTreeMap<(u32, u32), Vec<Subset>> = Default::default();
    for x in space.universe().subsets().skip(1) {
        let (l, u) = oracle_bounds(space, x);
        groups.entry((l.bits(), u.bits())).or_default().push(x);
    }
    groups.into_values().collect()
}

/// The listing of `(x, x^l, x^u)` printed for the example space. It omits
/// `cq` and `abefq`.
pub const LISTED_TRIPLES: &str = "a,0,abc b,0,abc c,0,abc e,0,ef f,0,ef q,q,q ab,0,abc ac,0,abc \
ae,0,abcef af,0,abcef aq,q,abcq bc,0,abc be,0,abcef bf,0,abcef bq,q,abcq ec,0,abcef \
cf,0,abcef ef,ef,ef eq,q,efq fq,q,efq abc,abc,abc abe,0,abcef abf,0,abcef abq,q,abcq \
bce,0,abcef bcf,0,abcef bcq,q,abcq ace,0,abcef acf,0,abcef acq,q,abcq aef,ef,abcef \
bef,ef,abcef cef,ef,abcef aeq,q,S afq,q,S beq,q,S bfq,q,S ceq,q,S cfq,q,S efq,efq,efq \
abce,abc,abcef abcf,abc,abcef abcq,abcq,abcq abef,ef,abcef abeq,q,S abfq,q,S bcef,ef,abcef \
bceq,q,S bcfq,q,S aceq,q,S acfq,q,S acef,ef,abcef aefq,efq,S befq,efq,S cefq,efq,S \
abcef,abcef,abcef abceq,abcq,S abcfq,abcq,S acefq,efq,S bcefq,efq,S S,S,S";

/// The seventeen nonempty rough classes as printed, separated by `;`.
pub const LISTED_CLASSES: &str = "a,b,c,ab,ac,bc; e,f; q; \
ae,af,be,bf,ce,cf,abe,ace,acf,abf,bce,bcf; abq,acq,bcq,aq,bq,cq; abce,abcf; \
aef,bef,cef,abef,acef,bcef; eq,fq; abc; abcef; ef; abcq; efq; S; \
aeq,beq,ceq,afq,bfq,cfq,abeq,aceq,bceq,abfq,bcfq,acfq; aefq,befq,cefq,abefq,bcefq,acefq; abceq,abcfq";

pub fn listed_triples(space: &ApproximationSpace) -> Vec<(Subset, Subset, Subset)> {
    LISTED_TRIPLES
        .split_whitespace()
        .map(|t| {
            let v: Vec<Subset> = t.split(',').map(|s| space.parse(s).unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect()
}

pub fn listed_classes(space: &ApproximationSpace) -> Vec<Vec<Subset>> {
    LISTED_CLASSES
        .split(';')
        .map(|c| {
            let mut v: Vec<Subset> = c.split(',').map(|s| space.parse(s.trim()).unwrap()).collect();
            v.sort();
            v
        })
        .collect()
}

/// Every partition of an `n`-atom universe, via restricted growth strings.
pub fn all_spaces(n: usize) -> Vec<ApproximationSpace> {
    let names: String = (b'a'..).take(n).map(char::from).collect();
    let u = Universe::from_chars(&names).unwrap();
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let blocks = (0..k)
            .map(|b| (0..n).filter(|&i| rgs[i] == b).fold(u.empty(), |s, i| s.with(i)))
            .collect();
        out.push(ApproximationSpace::from_partition(u.clone(), blocks).unwrap());
        // next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let max_prev = rgs[..i].iter().max().copied().unwrap_or(0);
            if rgs[i] <= max_prev {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
        }
    }
}
