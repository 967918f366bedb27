use ndarray::Array2;
use ndarray_linalg::Eigh;
use num_complex::Complex64;
use std::time::Instant;

fn main() {
    let n = 2000usize;
    let r = 100.0f64;
    let m = 1000usize;
    let t0 = Instant::now();
    let mut g = Array2::<Complex64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let a = Complex64::from_polar(r, std::f64::consts::PI * i as f64 / m as f64);
            let b = Complex64::from_polar(r, std::f64::consts::PI * j as f64 / m as f64);
            g[(i, j)] = (-(a.norm_sqr() + b.norm_sqr()) / 2.0
                + a.conj() * b)
                .exp();
        }
    }
    println!("gram build: {:?}", t0.elapsed());
    let t1 = Instant::now();
    let (vals, _vecs) = g.eigh(ndarray_linalg::UPLO::Lower).unwrap();
    println!("eigh {}x{}: {:?}", n, n, t1.elapsed());
    let s: f64 = vals.sum();
    println!("trace: {s} (expect {n}), min {:?} max {:?}", vals.iter().cloned().fold(f64::INFINITY, f64::min), vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
}
