//! Textual integrand specifications: `power(b, k, alpha)` and
//! `powerlog(b, k, beta)`, optionally followed by `envelope=gauss`.

use anyhow::{anyhow, bail, Context, Result};
use singquad_core::{Envelope, Family, SingularIntegrand};

fn parse_args(inner: &str) -> Result<(f64, u32, f64)> {
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("expected three arguments (b, k, exponent), got {}", parts.len());
    }
    let b = parts[0].parse::<f64>().with_context(|| format!("bad b `{}`", parts[0]))?;
    let k = parts[1].parse::<u32>().with_context(|| format!("bad k `{}`", parts[1]))?;
    let e = parts[2].parse::<f64>().with_context(|| format!("bad exponent `{}`", parts[2]))?;
    Ok((b, k, e))
}

pub fn parse_integrand(text: &str) -> Result<SingularIntegrand> {
    let text = text.trim();
    let open = text.find('(').ok_or_else(|| anyhow!("missing `(` in `{text}`"))?;
    let close = text.find(')').ok_or_else(|| anyhow!("missing `)` in `{text}`"))?;
    if close < open {
        bail!("malformed specification `{text}`");
    }
    let name = text[..open].trim().to_ascii_lowercase();
    let (b, k, e) = parse_args(&text[open + 1..close])?;
    let mut f = match name.as_str() {
        "power" => SingularIntegrand::power(b, k, e)?,
        "powerlog" => SingularIntegrand::power_log(b, k, e)?,
        other => bail!("unknown family `{other}` (expected power or powerlog)"),
    };
    let rest = text[close + 1..].trim_start_matches([',', ';', ' ', '*']).trim();
    if !rest.is_empty() {
        let (key, value) = rest.split_once('=').ok_or_else(|| anyhow!("unexpected `{rest}`"))?;
        match (key.trim(), value.trim().to_ascii_lowercase().as_str()) {
            ("envelope", "gauss") => f = f.with_envelope(Envelope::Gaussian),
            (k, v) => bail!("unsupported modifier `{k}={v}`"),
        }
    }
    Ok(f)
}

/// Inverse of [`parse_integrand`] for the supported forms.
pub fn describe(f: &SingularIntegrand) -> String {
    let base = match f.family() {
        Family::Power { k, alpha } => format!("power({}, {}, {})", f.b(), k, alpha),
        Family::PowerLog { k, beta } => format!("powerlog({}, {}, {})", f.b(), k, beta),
        Family::GeneralJump(_) => format!("general({})", f.b()),
    };
    match f.envelope() {
        Some(Envelope::Gaussian) => format!("{base} envelope=gauss"),
        Some(Envelope::Custom { .. }) => format!("{base} envelope=custom"),
        None => base,
    }
}
