//! Evaluation settings and the shared caches used by every numerical routine.

use crate::error::{Result, ZetaError};
use crate::exact::{format_rational, parse_fraction, BigRational};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::{Arc, RwLock};

/// Header line of the on-disk Stieltjes cache.
pub const CACHE_HEADER: &str = "BZCACHE v1";

pub type StieltjesKey = (usize, BigRational);

/// Insert-once map shared between clones of an [`EvalContext`].
#[derive(Debug)]
pub struct SharedCache<K, V> {
    inner: Arc<RwLock<HashMap<K, V>>>,
}

impl<K, V> Clone for SharedCache<K, V> {
    fn clone(&self) -> Self {
        SharedCache {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<K, V> Default for SharedCache<K, V> {
    fn default() -> Self {
        SharedCache {
            inner: Arc::new(RwLock::new(HashMap::new())),
        }
    }
}

impl<K: std::hash::Hash + Eq + Clone, V: Clone> SharedCache<K, V> {
    pub fn get(&self, key: &K) -> Option<V> {
        self.inner.read().expect("cache poisoned").get(key).cloned()
    }

    /// Stores `value` unless the key is already present; returns the stored value.
    pub fn insert(&self, key: K, value: V) -> V {
        self.inner
            .write()
            .expect("cache poisoned")
            .entry(key)
            .or_insert(value)
            .clone()
    }

    pub fn get_or_insert_with(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let v = f();
        self.insert(key, v)
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn snapshot(&self) -> Vec<(K, V)> {
        self.inner
            .read()
            .expect("cache poisoned")
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }
}

/// Key for tables of `H^{(c)}(m, u/v)` over all `u = 1..v`.
pub(crate) type HTableKey = (usize, usize, usize);

#[derive(Clone, Debug)]
pub struct EvalContext {
    /// Direct-sum length `M` of the Euler–Maclaurin formula.
    pub em_terms: usize,
    /// Number `J` of Bernoulli correction terms.
    pub em_order: usize,
    /// Direct-sum length for the Stieltjes constants.
    pub stieltjes_terms: usize,
    /// Bernoulli correction terms for the Stieltjes constants.
    pub stieltjes_order: usize,
    /// Truncation of the Fourier series in the Kummer formulas.
    pub fourier_terms: usize,
    pub target_tol: f64,
    pub(crate) stieltjes_cache: SharedCache<StieltjesKey, f64>,
    pub(crate) h_tables: SharedCache<HTableKey, Arc<Vec<f64>>>,
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext {
            em_terms: 40,
            em_order: 15,
            stieltjes_terms: 40,
            stieltjes_order: 15,
            fourier_terms: 1_000_000,
            target_tol: 1e-10,
            stieltjes_cache: SharedCache::default(),
            h_tables: SharedCache::default(),
        }
    }
}

impl EvalContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn validate(&self) -> Result<()> {
        if self.em_terms < 1 || self.em_order < 1 {
            return Err(ZetaError::Domain("em_terms and em_order must be >= 1".into()));
        }
        if self.stieltjes_terms < 1 || self.stieltjes_order < 1 {
            return Err(ZetaError::Domain(
                "stieltjes_terms and stieltjes_order must be >= 1".into(),
            ));
        }
        if !(self.target_tol > 0.0) {
            return Err(ZetaError::Domain("target_tol must be positive".into()));
        }
        if self.em_order > 60 || self.stieltjes_order > 60 {
            return Err(ZetaError::Domain("Bernoulli correction order capped at 60".into()));
        }
        Ok(())
    }

    pub fn stieltjes_cache_len(&self) -> usize {
        self.stieltjes_cache.len()
    }

    /// Serializes the Stieltjes cache in a stable (sorted) order.
    pub fn stieltjes_cache_to_string(&self) -> String {
        let mut entries = self.stieltjes_cache.snapshot();
        entries.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then_with(|| a.0 .1.cmp(&b.0 .1)));
        let mut out = String::from(CACHE_HEADER);
        out.push('\n');
        for ((n, x), v) in entries {
            let _ = writeln!(out, "{n}\t{}\t{}", format_rational(&x), crate::fmt17(v));
        }
        out
    }

    /// Loads entries written by [`EvalContext::stieltjes_cache_to_string`].
    pub fn load_stieltjes_cache_str(&self, text: &str) -> Result<usize> {
        let mut lines = text.lines();
        match lines.next() {
            Some(h) if h.trim() == CACHE_HEADER => {}
            other => {
                return Err(ZetaError::Domain(format!(
                    "cache header mismatch: expected {CACHE_HEADER:?}, got {other:?}"
                )))
            }
        }
        let mut count = 0;
        for (lineno, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = || ZetaError::Domain(format!("malformed cache line {}: {line:?}", lineno + 2));
            let mut parts = line.split('\t');
            let n: usize = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
            let x = parts.next().ok_or_else(bad).and_then(parse_fraction)?;
            let v: f64 = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
            self.stieltjes_cache.insert((n, x), v);
            count += 1;
        }
        Ok(count)
    }

    pub fn load_stieltjes_cache(&self, path: &Path) -> Result<usize> {
        match std::fs::read_to_string(path) {
            Ok(text) => self.load_stieltjes_cache_str(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
            Err(e) => Err(ZetaError::Domain(format!("reading {}: {e}", path.display()))),
        }
    }

    pub fn save_stieltjes_cache(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.stieltjes_cache_to_string())
            .map_err(|e| ZetaError::Domain(format!("writing {}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn defaults_are_valid() {
        EvalContext::default().validate().unwrap();
        let bad = EvalContext {
            target_tol: 0.0,
            ..EvalContext::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn cache_text_roundtrip() {
        let ctx = EvalContext::default();
        ctx.stieltjes_cache.insert((1, rat(1, 3)), -0.123456789012345678);
        ctx.stieltjes_cache.insert((0, rat(1, 1)), 0.5772156649015329);
        let text = ctx.stieltjes_cache_to_string();
        assert!(text.starts_with("BZCACHE v1\n0\t1\t"));
        let other = EvalContext::default();
        assert_eq!(other.load_stieltjes_cache_str(&text).unwrap(), 2);
        assert_eq!(
            other.stieltjes_cache.get(&(1, rat(1, 3))),
            Some(-0.123456789012345678)
        );
        assert!(other.load_stieltjes_cache_str("BZCACHE v0\n").is_err());
    }

    #[test]
    fn clones_share_caches() {
        let a = EvalContext::default();
        let b = a.clone();
        b.stieltjes_cache.insert((2, rat(1, 2)), 1.0);
        assert_eq!(a.stieltjes_cache_len(), 1);
        // insert-once semantics
        assert_eq!(a.stieltjes_cache.insert((2, rat(1, 2)), 5.0), 1.0);
    }
}
