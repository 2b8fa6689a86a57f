//! Structured outcome of one identity check.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{Frac, MPoly};

/// Longest failure detail kept verbatim; longer differences are cut.
const DETAIL_LIMIT: usize = 4000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    /// On failure, the cross-multiplied difference or an error message.
    pub detail: Option<String>,
}

impl IdentityReport {
    pub fn new(identity: &str) -> Self {
        IdentityReport {
            identity: identity.into(),
            params: Vec::new(),
            passed: true,
            detail: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    /// Records `lhs == rhs`; a mismatch stores `lhs.num*rhs.den - rhs.num*lhs.den`.
    pub fn expect_eq(&mut self, lhs: &Frac, rhs: &Frac) -> bool {
        let diff = lhs.cross_difference(rhs);
        if diff.is_zero() {
            return true;
        }
        self.fail_with(&diff);
        false
    }

    pub fn expect_poly_eq(&mut self, lhs: &MPoly, rhs: &MPoly) -> bool {
        let diff = lhs - rhs;
        if diff.is_zero() {
            return true;
        }
        self.fail_with(&diff);
        false
    }

    fn fail_with(&mut self, diff: &MPoly) {
        let mut text = format!("difference: {diff}");
        if text.len() > DETAIL_LIMIT {
            let mut cut = DETAIL_LIMIT;
            while !text.is_char_boundary(cut) {
                cut -= 1;
            }
            text.truncate(cut);
            text.push_str(" ...");
        }
        self.fail(text);
    }

    /// Marks the case failed; the first message wins.
    pub fn fail(&mut self, msg: impl Into<String>) {
        self.passed = false;
        if self.detail.is_none() {
            self.detail = Some(msg.into());
        }
    }

    pub fn check(&mut self, ok: bool, msg: &str) -> bool {
        if !ok {
            self.fail(msg);
        }
        ok
    }

    pub fn params_text(&self) -> String {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(" ")
    }
}
