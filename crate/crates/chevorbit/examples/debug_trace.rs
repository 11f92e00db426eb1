use chevorbit::chevalley::build_algebra;
use chevorbit::construct::{certified_representative, grading_element, orbit_table};
use chevorbit::rootsys::{build_root_system, Coweight};

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = build_root_system(&label).unwrap();
    let alg = build_algebra(&rs);
    eprintln!("algebra built, dim {}", alg.dim());
    if let Some(dstr) = std::env::args().nth(2) {
        let weights: Vec<i64> = dstr.split(',').map(|s| s.parse().unwrap()).collect();
        let d = Coweight::from_weights(weights);
        let h = grading_element(&rs, &d).unwrap();
        eprintln!("h = {h:?}");
        let rep = certified_representative(&alg, &d, &h, 30);
        eprintln!("rep: {rep:?}");
        return;
    }
    let table = orbit_table(&alg).unwrap();
    for e in &table {
        eprintln!("{:20} dim {:3} diagram {:?}", e.label, e.dim_orbit, e.diagram.weights);
    }
}
