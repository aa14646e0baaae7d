// timing probe for the [2,2] banana path at W=7
fn main() {
    use segline::graph::Graph;
    let mut g = Graph::new(3);
    for pole in 0..2usize {
        for _ in 0..2 {
            let m = g.add_vertex(format!("m{pole}"));
            g.add_edge(pole, m);
            g.add_edge(pole + 1, m);
        }
    }
    let t = std::time::Instant::now();
    let cfg = segline::oracle::GridConfig::width(7);
    let w = segline::oracle::oracle_seg(&g, &cfg).unwrap();
    println!("[2,2] W=7 seq: value={} in {:?}", w.value, t.elapsed());
    let t = std::time::Instant::now();
    let mut cfg4 = segline::oracle::GridConfig::width(7);
    cfg4.jobs = 4;
    let w4 = segline::oracle::oracle_seg(&g, &cfg4).unwrap();
    println!("[2,2] W=7 jobs=4: value={} in {:?}", w4.value, t.elapsed());
}
