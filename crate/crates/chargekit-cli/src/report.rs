//! Command reports: labeled human-readable sections plus a byte-stable
//! line-oriented machine block.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A mathematical violation or witness was found (exit code 1).
    Violation,
    Error,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub status: Status,
    sections: Vec<(String, String)>,
    machine: Vec<(String, String)>,
}

impl Report {
    pub fn new(verb: &str) -> Self {
        let mut report =
            Report { status: Status::Ok, sections: Vec::new(), machine: Vec::new() };
        report.kv("verb", verb);
        report
    }

    pub fn section(&mut self, label: impl Into<String>, body: impl Into<String>) -> &mut Self {
        self.sections.push((label.into(), body.into()));
        self
    }

    pub fn kv(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.machine.push((key.into(), value.into()));
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 3,
        }
    }

    /// Deterministic rendering: sections in insertion order, then the
    /// machine block with a trailing `status` key.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (label, body) in &self.sections {
            out.push_str(&format!("== {label} ==\n"));
            out.push_str(body.trim_end());
            out.push('\n');
        }
        out.push_str("-- machine --\n");
        for (k, v) in &self.machine {
            out.push_str(&format!("{k}={v}\n"));
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::Error => "error",
        };
        out.push_str(&format!("status={status}\n"));
        out
    }
}

/// A failure before or outside a report: carries the process exit code.
#[derive(Debug, Clone)]
pub struct CliFailure {
    pub code: i32,
    pub message: String,
}

impl CliFailure {
    pub fn semantic(message: impl Into<String>) -> Self {
        CliFailure { code: 3, message: message.into() }
    }
}

impl From<crate::text::TextError> for CliFailure {
    fn from(e: crate::text::TextError) -> Self {
        let code = match e.kind {
            crate::text::TextErrorKind::Parse => 2,
            crate::text::TextErrorKind::Range => 3,
        };
        CliFailure { code, message: e.to_string() }
    }
}
