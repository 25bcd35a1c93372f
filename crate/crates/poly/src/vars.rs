use std::sync::Arc;

use crate::PolyError;

/// Role of a variable in a [`VarSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    LeftBoundary,
    /// Bulk rapidity `z_i`, 1-based.
    Bulk(usize),
    RightBoundary,
    Aux,
}

/// Ordered, named variables. Index order is the monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    roles: Vec<Role>,
}

pub const MAX_VARS: usize = 16;

impl VarSet {
    pub fn new(names: Vec<String>, roles: Vec<Role>) -> Result<VarSet, PolyError> {
        if names.len() != roles.len() {
            return Err(PolyError::BadVarSet("names and roles differ in length".into()));
        }
        if names.len() > MAX_VARS {
            return Err(PolyError::BadVarSet(format!("at most {MAX_VARS} variables")));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::BadVarSet(format!("duplicate name {n}")));
            }
        }
        let bulk: Vec<usize> = roles
            .iter()
            .filter_map(|r| if let Role::Bulk(k) = r { Some(*k) } else { None })
            .collect();
        if bulk.iter().enumerate().any(|(j, &k)| k != j + 1) {
            return Err(PolyError::BadVarSet("bulk rapidities must be 1..L in order".into()));
        }
        Ok(VarSet { names, roles })
    }

    /// `x_l, z1..zL, x_r`, so `z_i` has index `i`, `x_l` index 0 and `x_r` index `L+1`.
    pub fn standard(l: usize) -> Arc<VarSet> {
        Self::standard_with_aux(l, &[])
    }

    pub fn standard_with_aux(l: usize, aux: &[&str]) -> Arc<VarSet> {
        let mut names = vec!["x_l".to_string()];
        let mut roles = vec![Role::LeftBoundary];
        for i in 1..=l {
            names.push(format!("z{i}"));
            roles.push(Role::Bulk(i));
        }
        names.push("x_r".into());
        roles.push(Role::RightBoundary);
        for a in aux {
            names.push(a.to_string());
            roles.push(Role::Aux);
        }
        Arc::new(VarSet::new(names, roles).expect("standard variable set"))
    }

    /// Plain list of auxiliary variables.
    pub fn aux(names: &[&str]) -> Arc<VarSet> {
        Arc::new(
            VarSet::new(names.iter().map(|s| s.to_string()).collect(), vec![Role::Aux; names.len()])
                .expect("aux variable set"),
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn index(&self, name: &str) -> Result<usize, PolyError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Number of bulk rapidities.
    pub fn bulk_count(&self) -> usize {
        self.roles.iter().filter(|r| matches!(r, Role::Bulk(_))).count()
    }

    pub fn bulk(&self, i: usize) -> Result<usize, PolyError> {
        self.roles
            .iter()
            .position(|r| *r == Role::Bulk(i))
            .ok_or_else(|| PolyError::UnknownVariable(format!("z{i}")))
    }

    pub fn left(&self) -> Result<usize, PolyError> {
        self.roles
            .iter()
            .position(|r| *r == Role::LeftBoundary)
            .ok_or_else(|| PolyError::UnknownVariable("x_l".into()))
    }

    pub fn right(&self) -> Result<usize, PolyError> {
        self.roles
            .iter()
            .position(|r| *r == Role::RightBoundary)
            .ok_or_else(|| PolyError::UnknownVariable("x_r".into()))
    }
}
