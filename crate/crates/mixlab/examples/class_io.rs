//! Generate the four class families, write one to disk and read it back.

use mixlab::hypothesis_graph::{gen_parity, gen_partitioned, gen_random, gen_threshold, read_class, write_class};

fn main() -> mixlab::Result<()> {
    let classes = [
        ("threshold(8)", gen_threshold(8)?),
        ("parity(3)", gen_parity(3)?),
        ("random(6x10)", gen_random(6, 10, 7)?),
        ("partitioned(8x12, r=3)", gen_partitioned(8, 12, 3, 7)?),
    ];
    for (name, c) in &classes {
        println!(
            "{name:<24} {}x{} edges={} density={:.3}",
            c.num_hypotheses(),
            c.num_examples(),
            c.total_edges(),
            c.density().as_f64()
        );
    }

    let mut buf = Vec::new();
    write_class(&classes[1].1, &mut buf)?;
    print!("\n{}", String::from_utf8_lossy(&buf));
    assert_eq!(read_class(&buf[..])?, classes[1].1);
    Ok(())
}
