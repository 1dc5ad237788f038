use std::fmt::Write as _;

use crate::args::Format;

/// Collects output lines in either style.
pub struct Out {
    format: Format,
    text: String,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out {
            format,
            text: String::new(),
        }
    }

    pub fn records(&self) -> bool {
        self.format == Format::Records
    }

    /// Full precision in records, 6 significant digits otherwise.
    pub fn num(&self, x: f64) -> String {
        match self.format {
            Format::Records => format!("{x:?}"),
            Format::Human => sig6(x),
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// `kind k1=v1 k2=v2` in records mode.
    pub fn record(&mut self, kind: &str, fields: &[(&str, String)]) {
        let mut s = kind.to_string();
        for (k, v) in fields {
            let _ = write!(s, " {k}={v}");
        }
        self.line(s);
    }

    pub fn finish(self) -> String {
        self.text
    }
}

/// Like C's `%.6g`.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let trim = |s: String| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.5e}");
        let (mantissa, e) = s.split_once('e').unwrap();
        format!("{}e{e}", trim(mantissa.to_string()))
    }
}
