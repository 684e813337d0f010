use psb_core::oracle::PairOracle;
use psb_core::*;
fn main() {
    for n in 3..=8 {
        let ts = enumerate_tours(n).unwrap();
        let o = PairOracle::new(ts.clone()).unwrap();
        let v = ts.tours();
        let (mut fe, mut fo, mut eo, mut tot, mut nonadj) = (0, 0, 0, 0, 0);
        let mut shown = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                tot += 1;
                let f = adjacent(&v[a], &v[b]).unwrap();
                let e = nonadj_exhaustive(&v[a], &v[b]).unwrap().is_none();
                let or = o.adjacent_ids(a, b);
                if !or {
                    nonadj += 1;
                }
                if f != e {
                    fe += 1;
                }
                if f != or {
                    fo += 1;
                }
                if e != or {
                    eo += 1;
                    if shown < 8 {
                        shown += 1;
                        println!(
                            "  n={n} x={} y={} exh_adj={e} oracle_adj={or} w={:?}",
                            v[a],
                            v[b],
                            o.witness_ids(a, b)
                                .map(|(z, t)| (v[z].to_string(), v[t].to_string()))
                        );
                    }
                }
            }
        }
        println!(
            "n={n} pairs={tot} nonadj={nonadj} fast!=exh {fe} fast!=oracle {fo} exh!=oracle {eo}"
        );
    }
}
