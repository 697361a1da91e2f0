use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;
use ybe_core::io::{from_json, to_canonical_json, ObjectFile};

/// Effective tolerance: `--tol` beats the `YBE_TOL` environment variable,
/// which beats the default.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64> {
    if let Some(t) = flag {
        return Ok(t);
    }
    if let Ok(raw) = std::env::var("YBE_TOL") {
        let t: f64 = raw
            .parse()
            .with_context(|| format!("YBE_TOL is not a number: {raw}"))?;
        return Ok(t);
    }
    Ok(ybe_core::DEFAULT_TOL)
}

pub fn load_object(path: &Path) -> Result<ObjectFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    from_json(&text).with_context(|| format!("cannot parse {}", path.display()))
}

pub fn write_object(path: &Path, file: &ObjectFile) -> Result<()> {
    std::fs::write(path, to_canonical_json(file))
        .with_context(|| format!("cannot write {}", path.display()))
}

/// A real literal: a float or an exact rational `p/q`.
fn parse_real(raw: &str) -> Result<f64> {
    if let Some((num, den)) = raw.split_once('/') {
        let num: f64 = num
            .parse()
            .map_err(|_| anyhow!("bad numerator in `{raw}`"))?;
        let den: f64 = den
            .parse()
            .map_err(|_| anyhow!("bad denominator in `{raw}`"))?;
        if den == 0.0 {
            bail!("zero denominator in `{raw}`");
        }
        return Ok(num / den);
    }
    raw.parse().map_err(|_| anyhow!("bad number `{raw}`"))
}

/// Parses a complex scalar. Accepted forms: floats (`2`, `-1.5`), exact
/// rationals (`-2/9`), rectangular combinations (`1+2i`, `0.5-0.25i`, `2i`),
/// and roots of unity `w<n>[^k]` = e^{2πik/n} with an optional rational
/// coefficient (`1/2*w3^2`).
pub fn parse_complex(raw: &str) -> Result<Complex64> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        bail!("empty complex literal");
    }
    if let Some(pos) = s.find('w') {
        let (coef, root) = match s[..pos].strip_suffix('*') {
            Some(prefix) => (parse_real(prefix)?, &s[pos..]),
            None if pos == 0 => (1.0, s.as_str()),
            None => bail!("root-of-unity coefficient must end with `*` in `{raw}`"),
        };
        let body = &root[1..];
        let (n, k) = match body.split_once('^') {
            Some((n, k)) => (
                n.parse::<u32>().map_err(|_| anyhow!("bad root order in `{raw}`"))?,
                k.parse::<i64>().map_err(|_| anyhow!("bad root power in `{raw}`"))?,
            ),
            None => (
                body.parse::<u32>().map_err(|_| anyhow!("bad root order in `{raw}`"))?,
                1,
            ),
        };
        if n == 0 {
            bail!("root order must be positive in `{raw}`");
        }
        let angle = std::f64::consts::TAU * k as f64 / f64::from(n);
        return Ok(Complex64::from_polar(coef, angle));
    }
    if let Some(img) = s.strip_suffix('i') {
        // find the split between real and imaginary parts
        let bytes = img.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(k) => (&img[..k], &img[k..]),
            None => ("0", img),
        };
        let im: f64 = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => parse_real(im_str)?,
        };
        let re: f64 = if re_str.is_empty() {
            0.0
        } else {
            parse_real(re_str)?
        };
        Ok(Complex64::new(re, im))
    } else {
        Ok(Complex64::new(parse_real(&s)?, 0.0))
    }
}

pub fn parse_complex_list(raw: &str) -> Result<Vec<Complex64>> {
    raw.split(',')
        .map(parse_complex)
        .collect::<Result<Vec<_>>>()
        .with_context(|| format!("cannot parse complex list `{raw}`"))
}

pub fn parse_index_list(raw: &str) -> Result<Vec<usize>> {
    raw.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad index `{item}` in `{raw}`"))
        })
        .collect()
}

/// Formats a complex number compactly for reports.
pub fn show_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
