#![allow(dead_code)]

use std::process::{Command, Output};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_barnes-zeta"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("BARNES_ZETA_CACHE_DIR").output().expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

/// Value of `key = value` in text output.
pub fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no field {key} in {text:?}"))
        .parse()
        .expect("numeric field")
}

/// `B_{2j}/(2j)!` for `j = 1..=4`.
const BERNOULLI_RATIOS: [f64; 4] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
];

/// `sum_{n in N^d} (a + n . w)^{-s}` for `s > d`, summed directly in the
/// first coordinate up to `a + K w_1 >= 12`, with the rest of that direction
/// replaced by its integral plus Euler–Maclaurin corrections. Derivatives and
/// integrals along `w_1` are again lattice sums: `d/dt T(a + t w_1; s) =
/// -s w_1 T(a + t w_1; s + 1)` and `int_K^inf T(a + t w_1; s) dt =
/// T(a + K w_1; s - 1) / ((s - 1) w_1)`.
pub fn lattice_sum(a: f64, w: &[f64], s: f64) -> f64 {
    let Some((&w1, rest)) = w.split_first() else {
        return a.powf(-s);
    };
    let k = ((12.0 - a) / w1).ceil().max(4.0) as usize;
    let mut direct = 0.0;
    for m in (0..k).rev() {
        direct += lattice_sum(a + m as f64 * w1, rest, s);
    }
    let big_a = a + k as f64 * w1;
    let mut tail = lattice_sum(big_a, rest, s - 1.0) / ((s - 1.0) * w1) + 0.5 * lattice_sum(big_a, rest, s);
    let mut rising = s;
    let mut w_pow = w1;
    for (j, b) in BERNOULLI_RATIOS.iter().enumerate() {
        if j > 0 {
            let base = s + (2 * j - 1) as f64;
            rising *= base * (base + 1.0);
            w_pow *= w1 * w1;
        }
        tail += b * rising * w_pow * lattice_sum(big_a, rest, s + (2 * j + 1) as f64);
    }
    direct + tail
}
