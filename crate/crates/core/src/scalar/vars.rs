//! Global registry of scalar variables.
//!
//! Variable 0 is always the deformation parameter `q`; central commuting
//! parameters (vector components, spectral variables) are interned on first
//! use. Ids are stable for the lifetime of the process, which fixes the
//! graded-lexicographic monomial order used for canonical forms.

use std::sync::{OnceLock, RwLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub u32);

fn registry() -> &'static RwLock<Vec<String>> {
    static REG: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(vec!["q".to_string()]))
}

/// The deformation parameter `q`.
pub fn q_var() -> VarId {
    VarId(0)
}

/// Intern a parameter name, returning its stable id.
pub fn intern(name: &str) -> VarId {
    {
        let reg = registry().read().unwrap();
        if let Some(pos) = reg.iter().position(|n| n == name) {
            return VarId(pos as u32);
        }
    }
    let mut reg = registry().write().unwrap();
    if let Some(pos) = reg.iter().position(|n| n == name) {
        return VarId(pos as u32);
    }
    reg.push(name.to_string());
    VarId((reg.len() - 1) as u32)
}

pub fn name(id: VarId) -> String {
    registry().read().unwrap()[id.0 as usize].clone()
}

/// Look up an already-interned name without creating it.
pub fn lookup(name: &str) -> Option<VarId> {
    let reg = registry().read().unwrap();
    reg.iter().position(|n| n == name).map(|p| VarId(p as u32))
}
