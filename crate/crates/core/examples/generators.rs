//! Seeded generators and the point-file format.
//!
//! cargo run --example generators -- "planted:lines=2,per_line=5,noise=3,box=10" 7

use collinear::cli::{parse_points, GenSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let spec: GenSpec = args
        .next()
        .unwrap_or_else(|| "planted:lines=2,per_line=5,noise=3,box=10".into())
        .parse()
        .unwrap_or_else(|e| panic!("{e}"));
    let seed = args.next().map_or(7, |s| s.parse().unwrap());
    let ps = spec.generate(seed).unwrap();

    let mut text = format!("# {spec:?} seed {seed}\n");
    for p in ps.points() {
        text.push_str(&format!("{} {}\n", p.x, p.y));
    }
    print!("{text}");

    // Round trip through the file format.
    assert_eq!(parse_points(&text).unwrap(), ps);
    match parse_points("0 0\n4 4\n0 0\n") {
        Err(e) => eprintln!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
