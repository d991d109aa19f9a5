//! Total perimeter of all retained squares: finite exactly below a = 1/4.

use quasifractal::cantor::perimeter_series;
use quasifractal::geom::rat;

fn main() -> quasifractal::Result<()> {
    for a in [rat(1, 5), rat(1, 4), rat(3, 10), rat(1, 3), rat(2, 5)] {
        let s = perimeter_series(&a, 10)?;
        let limit = s.limit.map_or_else(|| "diverges".to_string(), |l| l.to_string());
        println!(
            "a = {a:>4}: finite = {:<5}  S_10 = {:<24} limit = {limit}",
            s.finite,
            s.partial_sum.to_string()
        );
    }

    println!("\npartial sums at a = 1/5 approach 20:");
    for n in [0, 1, 2, 5, 10, 20] {
        let s = perimeter_series(&rat(1, 5), n)?;
        let gap = s.limit.expect("convergent") - &s.partial_sum;
        println!("  n = {n:>2}: S_n = {}  (20 - S_n = {gap})", s.partial_sum);
    }
    Ok(())
}
