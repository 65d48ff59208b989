//! Quadrature rules and the per-cell test sets used by the limiter.

use irpdg::quadrature::{
    gauss_legendre, gauss_lobatto, lobatto_count_for_degree, lobatto_endpoint_weight, test_set_1d,
    test_set_rect,
};

fn main() -> irpdg::Result<()> {
    for n in 2..=5 {
        let g = gauss_legendre(n)?;
        let l = gauss_lobatto(n)?;
        println!("n = {n}");
        println!("  Gauss   nodes {:?}", g.nodes);
        println!("  Lobatto nodes {:?}", l.nodes);
        println!("  Lobatto endpoint weight {} = 1/(n(n-1))", l.weights[0]);
    }

    for k in 1..=3 {
        let ts1 = test_set_1d(k, [0.0, 1.0])?;
        let ts2 = test_set_rect(k, [0.0, 1.0], [0.0, 2.0])?;
        println!(
            "k = {k}: {} Lobatto points, endpoint weight {:.4}, 1D test set {} points, rectangle {} points ({} distinct), weight sum {}",
            lobatto_count_for_degree(k),
            lobatto_endpoint_weight(k),
            ts1.unique_reference_points().len(),
            ts2.points.len(),
            ts2.unique_reference_points().len(),
            ts2.weight_sum()
        );
    }

    // The weights reproduce the cell average of x^2 y^2 on the unit square.
    let ts = test_set_rect(2, [0.0, 1.0], [0.0, 1.0])?;
    let avg: f64 = ts
        .points
        .iter()
        .map(|p| p.weight * (p.physical[0] * p.physical[1]).powi(2))
        .sum();
    println!("mean of x^2 y^2 from the test set: {avg:.15} (exact 1/9)");
    Ok(())
}
