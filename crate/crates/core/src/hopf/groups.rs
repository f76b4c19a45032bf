//! Finite groups as multiplication tables of element indices, identity at 0.

use crate::error::{Error, Result};

pub type GroupTable = Vec<Vec<usize>>;

/// Checks closure, identity at index 0, associativity and inverses.
pub fn validate(table: &GroupTable) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!(
                "row {a} has length {}",
                row.len()
            )));
        }
        if let Some(b) = row.iter().position(|&x| x >= n) {
            return Err(Error::NotAGroup(format!(
                "product ({a}, {b}) = {} is out of range",
                row[b]
            )));
        }
    }
    for g in 0..n {
        if table[0][g] != g || table[g][0] != g {
            return Err(Error::NotAGroup(format!(
                "index 0 is not an identity: witness (0, {g})"
            )));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails: witness ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    for g in 0..n {
        if inverse(table, g).is_none() {
            return Err(Error::NotAGroup(format!("element {g} has no inverse")));
        }
    }
    Ok(())
}

pub fn inverse(table: &GroupTable, g: usize) -> Option<usize> {
    (0..table.len()).find(|&h| table[g][h] == 0 && table[h][g] == 0)
}

pub fn cyclic(n: usize) -> GroupTable {
    (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect()
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let m = b.len();
    let n = a.len() * m;
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| a[x / m][y / m] * m + b[x % m][y % m])
                .collect()
        })
        .collect()
}

/// Closes `gens` under `mul` and returns the table, identity first.
pub fn generate<T: Clone + PartialEq>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
) -> GroupTable {
    let mut elems = vec![identity];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = mul(&elems[i], g);
            if !elems.contains(&p) {
                elems.push(p);
            }
        }
        i += 1;
    }
    let index = |x: &T| elems.iter().position(|e| e == x).expect("closed");
    elems
        .iter()
        .map(|a| elems.iter().map(|b| index(&mul(a, b))).collect())
        .collect()
}

// signature fixed by `generate`
#[allow(clippy::ptr_arg)]
fn compose(p: &Vec<usize>, q: &Vec<usize>) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

pub fn symmetric3() -> GroupTable {
    generate(vec![0, 1, 2], &[vec![1, 0, 2], vec![1, 2, 0]], compose)
}

pub fn dihedral4() -> GroupTable {
    generate(
        vec![0, 1, 2, 3],
        &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]],
        compose,
    )
}

pub fn quaternion8() -> GroupTable {
    // Hamilton product on integer quaternions (w, x, y, z)
    fn qmul(a: &[i8; 4], b: &[i8; 4]) -> [i8; 4] {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }
    generate([1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], qmul)
}

/// Every group of order at most 8, up to isomorphism.
pub fn small_groups() -> Vec<(&'static str, GroupTable)> {
    vec![
        ("C1", cyclic(1)),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2xC2", direct_product(&cyclic(2), &cyclic(2))),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", symmetric3()),
        ("C7", cyclic(7)),
        ("C8", cyclic(8)),
        ("C4xC2", direct_product(&cyclic(4), &cyclic(2))),
        (
            "C2xC2xC2",
            direct_product(&direct_product(&cyclic(2), &cyclic(2)), &cyclic(2)),
        ),
        ("D4", dihedral4()),
        ("Q8", quaternion8()),
    ]
}
