//! Flat `key = value` config files with `[section]` headers, parsed here so
//! runs are reproducible from bytes alone. Sections: `[function]`, `[family]`,
//! `[multiplier]`, `[run]`. `#` starts a comment, full-line or trailing.
//!
//! Every resolved knob is logged with its provenance (flag / config / default)
//! and replayed in the report header. Keys nobody read are errors: a typo that
//! silently falls back to a default is worse than a refusal.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;
use trigapprox::{
    CoefficientRule, Error, Multiplier, NormKind, OrliczEntry, OrliczFamily, Result, Spectrum,
};

const SECTIONS: [&str; 4] = ["function", "family", "multiplier", "run"];

#[derive(Debug, Default)]
pub struct Parsed {
    // section -> key -> (value, line number)
    entries: BTreeMap<String, BTreeMap<String, (String, usize)>>,
}

pub fn parse_str(text: &str) -> Result<Parsed> {
    let mut parsed = Parsed::default();
    let mut section = String::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| {
                    Error::Config(format!("line {line_no}: unterminated section header"))
                })?
                .trim()
                .to_ascii_lowercase();
            if !SECTIONS.contains(&name.as_str()) {
                return Err(Error::Config(format!(
                    "line {line_no}: unknown section [{name}]; expected one of {SECTIONS:?}"
                )));
            }
            section = name;
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!(
                "line {line_no}: expected `key = value`, got `{line}`"
            ))
        })?;
        if section.is_empty() {
            return Err(Error::Config(format!(
                "line {line_no}: `{}` appears before any [section] header",
                key.trim()
            )));
        }
        let key = key.trim().to_ascii_lowercase();
        if key.is_empty() {
            return Err(Error::Config(format!("line {line_no}: empty key")));
        }
        let prev = parsed
            .entries
            .entry(section.clone())
            .or_default()
            .insert(key.clone(), (value.trim().to_string(), line_no));
        if let Some((_, first)) = prev {
            return Err(Error::Config(format!(
                "line {line_no}: duplicate key `{key}` in [{section}] (first set on line {first})"
            )));
        }
    }
    Ok(parsed)
}

pub fn parse_file(path: &Path) -> Result<Parsed> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
    parse_str(&text)
}

/// Where a knob's value came from, for the report header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Flag,
    Config,
    Default,
}

impl Source {
    fn label(self) -> &'static str {
        match self {
            Source::Flag => "flag",
            Source::Config => "config",
            Source::Default => "default",
        }
    }
}

/// Resolves knobs with flag > config > default precedence, logging each one.
pub struct Resolver {
    parsed: Parsed,
    log: RefCell<Vec<String>>,
    consumed: RefCell<Vec<(String, String)>>,
}

impl Resolver {
    pub fn new(parsed: Parsed) -> Self {
        Resolver {
            parsed,
            log: RefCell::new(Vec::new()),
            consumed: RefCell::new(Vec::new()),
        }
    }

    pub fn empty() -> Self {
        Resolver::new(Parsed::default())
    }

    /// The `name = value (source)` lines, in resolution order.
    pub fn knob_lines(&self) -> Vec<String> {
        self.log.borrow().clone()
    }

    fn raw(&self, section: &str, key: &str) -> Option<String> {
        let v = self
            .parsed
            .entries
            .get(section)
            .and_then(|m| m.get(key))
            .map(|(v, _)| v.clone());
        if v.is_some() {
            self.consumed
                .borrow_mut()
                .push((section.to_string(), key.to_string()));
        }
        v
    }

    fn note(&self, section: &str, key: &str, shown: &str, source: Source) {
        self.log
            .borrow_mut()
            .push(format!("{section}.{key} = {shown} ({})", source.label()));
    }

    /// Every config key must have been read by the command; leftovers are
    /// silent typos and get refused.
    pub fn finish(&self) -> Result<()> {
        let consumed = self.consumed.borrow();
        for (section, keys) in &self.parsed.entries {
            for (key, (_, line)) in keys {
                if !consumed.iter().any(|(s, k)| s == section && k == key) {
                    return Err(Error::Config(format!(
                        "line {line}: key `{key}` in [{section}] is not used by this subcommand"
                    )));
                }
            }
        }
        Ok(())
    }

    fn pick<T: Clone>(
        &self,
        section: &str,
        key: &str,
        flag: Option<T>,
        parse: impl Fn(&str) -> Result<T>,
        default: Option<T>,
        show: impl Fn(&T) -> String,
    ) -> Result<Option<T>> {
        let cfg = self.raw(section, key);
        let (value, source) = if let Some(v) = flag {
            (Some(v), Source::Flag)
        } else if let Some(text) = cfg {
            let v = parse(&text).map_err(|e| Error::Config(format!("[{section}] {key}: {e}")))?;
            (Some(v), Source::Config)
        } else {
            (default, Source::Default)
        };
        if let Some(v) = &value {
            self.note(section, key, &show(v), source);
        }
        Ok(value)
    }

    pub fn f64(&self, section: &str, key: &str, flag: Option<f64>, default: f64) -> Result<f64> {
        Ok(self
            .pick(section, key, flag, parse_f64, Some(default), |v| {
                format!("{v}")
            })?
            .unwrap())
    }

    pub fn f64_opt(&self, section: &str, key: &str, flag: Option<f64>) -> Result<Option<f64>> {
        self.pick(section, key, flag, parse_f64, None, |v| format!("{v}"))
    }

    /// An angle knob: accepts the literal `pi` besides plain numbers.
    pub fn angle(&self, section: &str, key: &str, flag: Option<&str>, default: f64) -> Result<f64> {
        let flag = flag.map(parse_angle).transpose()?;
        Ok(self
            .pick(section, key, flag, parse_angle, Some(default), |v| {
                format!("{v}")
            })?
            .unwrap())
    }

    pub fn usize(
        &self,
        section: &str,
        key: &str,
        flag: Option<usize>,
        default: usize,
    ) -> Result<usize> {
        Ok(self
            .pick(section, key, flag, parse_usize, Some(default), |v| {
                format!("{v}")
            })?
            .unwrap())
    }

    pub fn usize_opt(
        &self,
        section: &str,
        key: &str,
        flag: Option<usize>,
    ) -> Result<Option<usize>> {
        self.pick(section, key, flag, parse_usize, None, |v| format!("{v}"))
    }

    pub fn i64(&self, section: &str, key: &str, flag: Option<i64>, default: i64) -> Result<i64> {
        Ok(self
            .pick(
                section,
                key,
                flag,
                |s| {
                    s.parse::<i64>()
                        .map_err(|_| Error::Config(format!("`{s}` is not an integer")))
                },
                Some(default),
                |v| format!("{v}"),
            )?
            .unwrap())
    }

    pub fn string(
        &self,
        section: &str,
        key: &str,
        flag: Option<&str>,
        default: &str,
    ) -> Result<String> {
        Ok(self
            .pick(
                section,
                key,
                flag.map(|s| s.to_string()),
                |s| Ok(s.to_string()),
                Some(default.to_string()),
                |v| v.clone(),
            )?
            .unwrap())
    }

    pub fn string_opt(
        &self,
        section: &str,
        key: &str,
        flag: Option<&str>,
    ) -> Result<Option<String>> {
        self.pick(
            section,
            key,
            flag.map(|s| s.to_string()),
            |s| Ok(s.to_string()),
            None,
            |v| v.clone(),
        )
    }

    pub fn bool(&self, section: &str, key: &str, flag: bool, default: bool) -> Result<bool> {
        let flag = if flag { Some(true) } else { None };
        Ok(self
            .pick(
                section,
                key,
                flag,
                |s| match s.to_ascii_lowercase().as_str() {
                    "true" | "yes" | "1" => Ok(true),
                    "false" | "no" | "0" => Ok(false),
                    other => Err(Error::Config(format!("`{other}` is not a boolean"))),
                },
                Some(default),
                |v| format!("{v}"),
            )?
            .unwrap())
    }

    pub fn f64_list_opt(&self, section: &str, key: &str) -> Result<Option<Vec<f64>>> {
        self.pick(
            section,
            key,
            None,
            |s| s.split(',').map(|t| parse_f64(t.trim())).collect(),
            None,
            |v| format!("{} values", v.len()),
        )
    }

    pub fn complex_list_opt(&self, section: &str, key: &str) -> Result<Option<Vec<Complex64>>> {
        self.pick(
            section,
            key,
            None,
            |s| s.split(',').map(|t| parse_complex(t.trim())).collect(),
            None,
            |v| format!("{} values", v.len()),
        )
    }
}

pub fn parse_f64(s: &str) -> Result<f64> {
    let v: f64 = s
        .parse()
        .map_err(|_| Error::Config(format!("`{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(Error::Config(format!("`{s}` is not finite")));
    }
    Ok(v)
}

pub fn parse_usize(s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Config(format!("`{s}` is not a nonnegative integer")))
}

/// Numbers plus the literal `pi`.
pub fn parse_angle(s: &str) -> Result<f64> {
    if s.eq_ignore_ascii_case("pi") {
        return Ok(PI);
    }
    let v = parse_f64(s)?;
    if v <= 0.0 {
        return Err(Error::Config(format!("angle must be positive, got {v}")));
    }
    Ok(v)
}

/// `re:im` or a bare real part.
fn parse_complex(s: &str) -> Result<Complex64> {
    match s.split_once(':') {
        Some((re, im)) => Ok(Complex64::new(parse_f64(re.trim())?, parse_f64(im.trim())?)),
        None => Ok(Complex64::new(parse_f64(s)?, 0.0)),
    }
}

pub fn parse_norm_kind(s: &str) -> Result<NormKind> {
    match s.to_ascii_lowercase().as_str() {
        "luxemburg" => Ok(NormKind::Luxemburg),
        "orlicz" => Ok(NormKind::Orlicz),
        other => Err(Error::Config(format!(
            "norm kind must be `luxemburg` or `orlicz`, got `{other}`"
        ))),
    }
}

/// Flags that feed the function/family/multiplier builders; commands pass
/// their clap-parsed copies down unchanged.
#[derive(Debug, Clone, Default)]
pub struct BuildFlags {
    pub rule: Option<String>,
    pub window: Option<usize>,
    pub k0: Option<i64>,
    pub ratio: Option<f64>,
    pub decay: Option<f64>,
    pub sample_file: Option<String>,
    pub p: Option<f64>,
    pub alpha: Option<f64>,
}

pub fn build_spectrum(r: &Resolver, flags: &BuildFlags) -> Result<Spectrum> {
    let rule = r
        .string_opt("function", "rule", flags.rule.as_deref())?
        .map(|s| s.to_ascii_lowercase());
    let Some(rule) = rule else {
        return Err(Error::Config(
            "no function given: set [function] rule (delta | geometric | powerdecay | \
             lacunary | explicit | samples) or pass --rule"
                .into(),
        ));
    };
    match rule.as_str() {
        "delta" => {
            let k0 = r.i64("function", "k0", flags.k0, 1)?;
            let window = r.usize(
                "function",
                "window",
                flags.window,
                (k0.unsigned_abs() as usize).max(1),
            )?;
            Spectrum::from_rule(&CoefficientRule::Delta { k0 }, window)
        }
        "geometric" => {
            let ratio = r
                .f64_opt("function", "ratio", flags.ratio)?
                .ok_or_else(|| Error::Config("geometric rule needs [function] ratio".into()))?;
            let window = r.usize("function", "window", flags.window, 32)?;
            Spectrum::from_rule(&CoefficientRule::Geometric { ratio }, window)
        }
        "powerdecay" => {
            let s = r
                .f64_opt("function", "s", flags.decay)?
                .ok_or_else(|| Error::Config("powerdecay rule needs [function] s".into()))?;
            let window = r.usize("function", "window", flags.window, 32)?;
            Spectrum::from_rule(&CoefficientRule::PowerDecay { s }, window)
        }
        "lacunary" => {
            let amps = r
                .f64_list_opt("function", "amplitudes")?
                .ok_or_else(|| Error::Config("lacunary rule needs [function] amplitudes".into()))?;
            if amps.is_empty() {
                return Err(Error::Config(
                    "lacunary needs at least one amplitude".into(),
                ));
            }
            let default_window = 1usize << (amps.len() - 1);
            let window = r.usize("function", "window", flags.window, default_window)?;
            Spectrum::from_rule(&CoefficientRule::Lacunary { amplitudes: amps }, window)
        }
        "explicit" => {
            let coeffs = r.complex_list_opt("function", "coeffs")?.ok_or_else(|| {
                Error::Config("explicit rule needs [function] coeffs (low to high)".into())
            })?;
            if coeffs.len() % 2 == 0 {
                return Err(Error::Config(format!(
                    "explicit coeffs must have odd length (two-sided window), got {}",
                    coeffs.len()
                )));
            }
            let derived = (coeffs.len() - 1) / 2;
            let window = r.usize("function", "window", flags.window, derived)?;
            Spectrum::from_coeffs(window, coeffs)
        }
        "samples" => {
            let file = r
                .string_opt("function", "file", flags.sample_file.as_deref())?
                .ok_or_else(|| Error::Config("samples rule needs [function] file".into()))?;
            let samples = read_samples(Path::new(&file))?;
            let default_window = ((samples.len().saturating_sub(2)) / 2).clamp(1, 64);
            let window = r.usize("function", "window", flags.window, default_window)?;
            Spectrum::from_samples(&samples, window)
        }
        other => Err(Error::Config(format!(
            "unknown coefficient rule `{other}`; expected delta | geometric | powerdecay | \
             lacunary | explicit | samples"
        ))),
    }
}

/// One `x real imag` triple per line; `x` must be the uniform grid
/// `2 pi j / N` in order (it is redundant, but catches silently shuffled or
/// subsampled files).
pub fn read_samples(path: &Path) -> Result<Vec<Complex64>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read sample file {}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Config(format!(
                "sample line {}: expected `x real imag`, got {} fields",
                i + 1,
                fields.len()
            )));
        }
        let x = parse_f64(fields[0])?;
        let re = parse_f64(fields[1])?;
        let im = parse_f64(fields[2])?;
        rows.push((x, Complex64::new(re, im)));
    }
    let n = rows.len();
    if n == 0 {
        return Err(Error::Config(format!(
            "sample file {} is empty",
            path.display()
        )));
    }
    for (j, (x, _)) in rows.iter().enumerate() {
        let want = 2.0 * PI * j as f64 / n as f64;
        if (x - want).abs() > 1e-8 * (1.0 + 2.0 * PI) {
            return Err(Error::Config(format!(
                "sample abscissa {j} is {x}, expected the uniform grid point {want}"
            )));
        }
    }
    Ok(rows.into_iter().map(|(_, c)| c).collect())
}

pub fn build_family(r: &Resolver, flags: &BuildFlags, window: usize) -> Result<OrliczFamily> {
    let kind = r
        .string("family", "kind", None, "lp")?
        .to_ascii_lowercase()
        .replace(['-', '_'], "");
    match kind.as_str() {
        "lp" => {
            let p = r.f64("family", "p", flags.p, 2.0)?;
            OrliczFamily::lp(window, p)
        }
        "scaledpower" => {
            let p = r.f64("family", "p", flags.p, 2.0)?;
            OrliczFamily::scaled_power(window, p)
        }
        "power" => {
            let exponents = r.f64_list_opt("family", "exponents")?.ok_or_else(|| {
                Error::Config("power family needs [family] exponents (one value broadcasts)".into())
            })?;
            let weights = r
                .f64_list_opt("family", "weights")?
                .unwrap_or_else(|| vec![1.0]);
            let m = 2 * window + 1;
            let spread = |vals: &[f64], what: &str| -> Result<Vec<f64>> {
                match vals.len() {
                    1 => Ok(vec![vals[0]; m]),
                    len if len == m => Ok(vals.to_vec()),
                    len => Err(Error::Config(format!(
                        "family {what}: need 1 (broadcast) or {m} values for window {window}, got {len}"
                    ))),
                }
            };
            let exponents = spread(&exponents, "exponents")?;
            let weights = spread(&weights, "weights")?;
            let entries = exponents
                .iter()
                .zip(&weights)
                .map(|(&e, &w)| OrliczEntry::power(e, w))
                .collect::<Result<Vec<_>>>()?;
            OrliczFamily::from_entries(window, entries)
        }
        other => Err(Error::Config(format!(
            "unknown family kind `{other}`; expected lp | scaled-power | power"
        ))),
    }
}

pub fn build_multiplier(r: &Resolver, flags: &BuildFlags) -> Result<Multiplier> {
    let kind = r
        .string("multiplier", "kind", None, "classical")?
        .to_ascii_lowercase();
    match kind.as_str() {
        "classical" => {
            let alpha = r.f64("multiplier", "alpha", flags.alpha, 1.0)?;
            Multiplier::classical(alpha)
        }
        "table" => {
            let text = r.string_opt("multiplier", "points", None)?.ok_or_else(|| {
                Error::Config("table multiplier needs [multiplier] points".into())
            })?;
            build_table_multiplier(&text)
        }
        other => Err(Error::Config(format!(
            "unknown multiplier kind `{other}`; expected classical | table"
        ))),
    }
}

/// `points = 0:0, 0.5:0.62, 3.141592653589793:2` — piecewise linear on the
/// listed abscissae, even in `t`, clamped to the last value beyond the table.
fn build_table_multiplier(text: &str) -> Result<Multiplier> {
    let mut ts = Vec::new();
    let mut vs = Vec::new();
    for part in text.split(',') {
        let (t, v) = part.trim().split_once(':').ok_or_else(|| {
            Error::Config(format!("table point `{}` is not `t:value`", part.trim()))
        })?;
        ts.push(parse_f64(t.trim())?);
        vs.push(parse_f64(v.trim())?);
    }
    if ts.len() < 2 {
        return Err(Error::Config(
            "table multiplier needs at least two points".into(),
        ));
    }
    if ts[0] != 0.0 || vs[0] != 0.0 {
        return Err(Error::Config("table multiplier must start at 0:0".into()));
    }
    for i in 1..ts.len() {
        if ts[i] <= ts[i - 1] {
            return Err(Error::Config(format!(
                "table abscissae must increase strictly; point {i} is {} after {}",
                ts[i],
                ts[i - 1]
            )));
        }
        if vs[i] < 0.0 {
            return Err(Error::Config(format!(
                "table value {} at point {i} is negative",
                vs[i]
            )));
        }
    }
    let bound = vs.iter().cloned().fold(0.0f64, f64::max);
    let f = Arc::new(move |t: f64| -> f64 {
        let t = t.abs();
        let last = ts.len() - 1;
        if t >= ts[last] {
            return vs[last];
        }
        // ts is sorted; find the bracketing segment.
        let mut i = 1;
        while ts[i] < t {
            i += 1;
        }
        let w = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
        vs[i - 1] + w * (vs[i] - vs[i - 1])
    });
    Ok(Multiplier::custom(f, Some(bound)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolver(text: &str) -> Resolver {
        Resolver::new(parse_str(text).unwrap())
    }

    #[test]
    fn parses_sections_comments_and_values() {
        let r = resolver(
            "# leading comment\n[function]\nrule = geometric # trailing\nratio = 0.5\n\n[run]\nkind = orlicz\n",
        );
        let spec = build_spectrum(&r, &BuildFlags::default()).unwrap();
        assert_eq!(spec.window(), 32);
        assert!((spec.abs(3) - 0.125).abs() < 1e-15);
        assert_eq!(
            parse_norm_kind(&r.string("run", "kind", None, "luxemburg").unwrap()).unwrap(),
            NormKind::Orlicz
        );
        r.finish().unwrap();
    }

    #[test]
    fn rejects_unknown_sections_duplicates_and_unread_keys() {
        assert!(parse_str("[nonsense]\nx = 1\n").is_err());
        assert!(parse_str("[run]\nn = 1\nn = 2\n").is_err());
        assert!(parse_str("n = 1\n").is_err());
        let r = resolver("[run]\ntypo_key = 3\n");
        assert!(r.finish().is_err());
    }

    #[test]
    fn flag_beats_config_beats_default() {
        let r = resolver("[run]\nh_grid = 512\n");
        assert_eq!(r.usize("run", "h_grid", Some(256), 2048).unwrap(), 256);
        let r = resolver("[run]\nh_grid = 512\n");
        assert_eq!(r.usize("run", "h_grid", None, 2048).unwrap(), 512);
        let r = resolver("");
        assert_eq!(r.usize("run", "h_grid", None, 2048).unwrap(), 2048);
        let lines = r.knob_lines();
        assert_eq!(lines, vec!["run.h_grid = 2048 (default)".to_string()]);
    }

    #[test]
    fn pi_literal_and_bad_angles() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("PI").unwrap(), PI);
        assert!((parse_angle("1.5").unwrap() - 1.5).abs() < 1e-15);
        assert!(parse_angle("-1").is_err());
        assert!(parse_angle("tau").is_err());
    }

    #[test]
    fn family_broadcast_and_per_index() {
        let r = resolver("[family]\nkind = power\nexponents = 2\n");
        let fam = build_family(&r, &BuildFlags::default(), 2).unwrap();
        assert_eq!(fam.uniform_power_exponent(), Some(2.0));

        let r = resolver("[family]\nkind = power\nexponents = 2, 1, 2\nweights = 1, 1, 1\n");
        let fam = build_family(&r, &BuildFlags::default(), 1).unwrap();
        assert_eq!(fam.uniform_power_exponent(), None);
        assert!((fam.eval(0, 3.0) - 3.0).abs() < 1e-15);
        assert!((fam.eval(1, 3.0) - 9.0).abs() < 1e-15);

        let r = resolver("[family]\nkind = power\nexponents = 2, 1\n");
        assert!(build_family(&r, &BuildFlags::default(), 1).is_err());
    }

    #[test]
    fn explicit_window_derivation() {
        let r = resolver("[function]\nrule = explicit\ncoeffs = 0:0, 1, 1:0\n");
        let spec = build_spectrum(&r, &BuildFlags::default()).unwrap();
        assert_eq!(spec.window(), 1);
        assert_eq!(spec.abs(0), 1.0);
        assert_eq!(spec.abs(1), 1.0);
        assert_eq!(spec.abs(-1), 0.0);
    }

    #[test]
    fn table_multiplier_interpolates_evenly_and_clamps() {
        let phi = build_table_multiplier("0:0, 1:1, 2:0.5").unwrap();
        assert_eq!(phi.eval(0.0), 0.0);
        assert!((phi.eval(0.5) - 0.5).abs() < 1e-15);
        assert!((phi.eval(-0.5) - 0.5).abs() < 1e-15);
        assert!((phi.eval(1.5) - 0.75).abs() < 1e-15);
        assert_eq!(phi.eval(10.0), 0.5);
        assert_eq!(phi.bound(), 1.0);
        assert!(build_table_multiplier("0:0").is_err());
        assert!(build_table_multiplier("0:1, 1:1").is_err());
        assert!(build_table_multiplier("0:0, 1:1, 1:2").is_err());
    }

    #[test]
    fn sample_files_must_sit_on_the_uniform_grid() {
        let dir = std::env::temp_dir().join("trigapprox-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let good = dir.join("good.txt");
        let n = 16;
        let mut text = String::new();
        for j in 0..n {
            let x = 2.0 * PI * j as f64 / n as f64;
            text.push_str(&format!("{x:.17} {} 0.0\n", (x.cos())));
        }
        std::fs::write(&good, &text).unwrap();
        let samples = read_samples(&good).unwrap();
        assert_eq!(samples.len(), 16);

        let bad = dir.join("bad.txt");
        std::fs::write(&bad, "0.0 1.0 0.0\n0.5 1.0 0.0\n").unwrap();
        assert!(read_samples(&bad).is_err());
    }
}
