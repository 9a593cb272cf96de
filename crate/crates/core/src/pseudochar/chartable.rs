//! Rational-valued characters of small groups, computed by Dixon's method:
//! simultaneous eigenvectors of the class multiplication matrices modulo a
//! prime `p = 1 mod exponent`, then Galois orbit sums lifted to integers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::FiniteGroup;
use crate::error::{Error, Result};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Null space of a square matrix over `F_p`.
fn null_space_mod(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..n {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..n {
                    a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0; n];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

/// A character with integer values, one per group element.
pub type IntCharacter = Vec<i64>;

/// The sums over Galois orbits of the irreducible characters: exactly the
/// characters of irreducible rational representations up to Schur index,
/// which is 1 for every group this is used on. Sorted by degree, then values.
pub fn rational_irreducible_characters(g: &FiniteGroup) -> Result<Vec<IntCharacter>> {
    let order = g.order();
    let classes = g.conjugacy_classes();
    let r = classes.len();
    let class_of = {
        let mut v = vec![0; order];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                v[x] = i;
            }
        }
        v
    };
    let e = g.exponent() as u64;
    let mut p = (2 * order as u64 / e + 1) * e + 1;
    while !is_prime(p) || p <= 2 * order as u64 {
        p += e;
    }
    // c[i][j][k] = #{(x, y) in C_i x C_j : xy = rep(C_k)}
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for (i, ci) in classes.iter().enumerate() {
        for &x in ci {
            for (j, cj) in classes.iter().enumerate() {
                for &y in cj {
                    let z = g.mul(x, y);
                    let k = class_of[z];
                    if classes[k][0] == z {
                        c[i][j][k] += 1;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut eigvecs: Option<Vec<Vec<u64>>> = None;
    for _ in 0..100 {
        let coeffs: Vec<u64> = (0..r).map(|_| rng.gen_range(0..p)).collect();
        // A[j][k] = sum_i coeffs_i c[i][j][k]; w is an eigenvector of every c[i]
        let a: Vec<Vec<u64>> = (0..r)
            .map(|j| (0..r).map(|k| (0..r).map(|i| coeffs[i] * c[i][j][k] % p).sum::<u64>() % p).collect())
            .collect();
        let mut vecs = Vec::new();
        for lambda in 0..p {
            let shifted: Vec<Vec<u64>> = (0..r)
                .map(|j| (0..r).map(|k| if j == k { (a[j][k] + p - lambda) % p } else { a[j][k] }).collect())
                .collect();
            let ns = null_space_mod(&shifted, p);
            if ns.len() > 1 {
                break;
            }
            vecs.extend(ns);
            if vecs.len() == r {
                break;
            }
        }
        if vecs.len() == r {
            eigvecs = Some(vecs);
            break;
        }
    }
    let eigvecs = eigvecs.ok_or_else(|| Error::InvalidGroup("could not separate the class matrices".into()))?;
    let inv_class: Vec<usize> = classes.iter().map(|cl| class_of[g.inverse(cl[0])]).collect();
    let mut irreducible_mod_p: Vec<Vec<u64>> = Vec::new();
    for v in eigvecs {
        let n0 = inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|x| x * n0 % p).collect();
        // d^2 = |G| / sum_j w_j w_j* / |C_j|
        let s = (0..r).map(|j| w[j] * w[inv_class[j]] % p * inv_mod(classes[j].len() as u64, p) % p).sum::<u64>() % p;
        let d2 = order as u64 % p * inv_mod(s, p) % p;
        let d = (1..=order as u64)
            .find(|d| d * d % p == d2 && d * d <= order as u64)
            .ok_or_else(|| Error::InvalidGroup("no character degree found".into()))?;
        let chi: Vec<u64> =
            (0..order).map(|x| d * w[class_of[x]] % p * inv_mod(classes[class_of[x]].len() as u64, p) % p).collect();
        irreducible_mod_p.push(chi);
    }
    // Galois orbits: chi^(k)(g) = chi(g^k) for k coprime to the exponent
    let mut used = vec![false; r];
    let mut out = Vec::new();
    for i in 0..r {
        if used[i] {
            continue;
        }
        let mut orbit = Vec::new();
        for k in (1..=e).filter(|&k| num_integer::gcd(k, e) == 1) {
            let conj: Vec<u64> = (0..order).map(|x| irreducible_mod_p[i][g.pow(x, k as usize)]).collect();
            let j = irreducible_mod_p
                .iter()
                .position(|c| *c == conj)
                .ok_or_else(|| Error::InvalidGroup("Galois conjugate is not a character".into()))?;
            if !orbit.contains(&j) {
                orbit.push(j);
            }
        }
        let mut sum = vec![0u64; order];
        for &j in &orbit {
            used[j] = true;
            for (s, x) in sum.iter_mut().zip(&irreducible_mod_p[j]) {
                *s = (*s + x) % p;
            }
        }
        let lifted: Vec<i64> = sum.iter().map(|&x| if x > p / 2 { x as i64 - p as i64 } else { x as i64 }).collect();
        // <psi, psi> must equal the orbit length
        let norm: i64 = (0..order).map(|x| lifted[x] * lifted[g.inverse(x)]).sum();
        if norm != (orbit.len() * order) as i64 {
            return Err(Error::InvalidGroup("orbit sum fails the orthogonality check".into()));
        }
        out.push(lifted);
    }
    out.sort_by(|a, b| (a[g.identity()], a).cmp(&(b[g.identity()], b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudochar::group::{cyclic, dihedral, quaternion, small_groups, symmetric};

    #[test]
    fn s3_characters() {
        let g = symmetric(3);
        let chars = rational_irreducible_characters(&g).unwrap();
        assert_eq!(chars.len(), 3);
        let classes = g.conjugacy_classes();
        let on_classes: Vec<Vec<i64>> = chars.iter().map(|c| classes.iter().map(|cl| c[cl[0]]).collect()).collect();
        // classes ordered by least element: identity, transpositions, 3-cycles
        assert!(on_classes.contains(&vec![2, 0, -1]));
        assert!(on_classes.contains(&vec![1, 1, 1]));
        assert!(on_classes.contains(&vec![1, -1, 1]));
    }

    #[test]
    fn cyclic_orbit_sums() {
        let chars = rational_irreducible_characters(&cyclic(5)).unwrap();
        assert_eq!(chars, vec![vec![1; 5], vec![4, -1, -1, -1, -1]]);
        let c4 = rational_irreducible_characters(&cyclic(4)).unwrap();
        assert_eq!(c4, vec![vec![1, -1, 1, -1], vec![1, 1, 1, 1], vec![2, 0, -2, 0]]);
    }

    #[test]
    fn degrees_square_sum() {
        // every orbit sum of a group with only rational characters is irreducible
        for g in [dihedral(4), quaternion(), symmetric(4)] {
            let chars = rational_irreducible_characters(&g).unwrap();
            let s: i64 = chars.iter().map(|c| c[0] * c[0]).sum();
            assert_eq!(s as usize, g.order());
        }
        for (name, g) in small_groups() {
            let chars = rational_irreducible_characters(&g).unwrap();
            // the regular character is sum (deg / orbit) * psi, so values at 1 bound the order
            assert!(chars.iter().all(|c| c[0] >= 1), "{name}");
        }
    }
}
