//! Permutations of branch-point indices and the theta group `S_U`.
//!
//! A permutation is stored 1-based as `sigma[i - 1] = σ(i)`, and acts on
//! polynomials by `σ(f) = f(a_{σ(1)}, …, a_{σ(r)})`.

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (1..=n).collect()
}

pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
    let mut p = identity(n);
    p.swap(i - 1, j - 1);
    p
}

/// `(σ∘τ)(i) = σ(τ(i))`.
pub fn compose(sigma: &[usize], tau: &[usize]) -> Perm {
    tau.iter().map(|&t| sigma[t - 1]).collect()
}

pub fn inverse(sigma: &[usize]) -> Perm {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s - 1] = i + 1;
    }
    inv
}

/// Sign via cycle decomposition.
pub fn sign(sigma: &[usize]) -> i64 {
    let mut seen = vec![false; sigma.len()];
    let mut parity = 0;
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = sigma[i] - 1;
            len += 1;
        }
        parity += len - 1;
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All permutations of `items` in lexicographic order (`items` sorted).
pub fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

pub fn all_permutations(n: usize) -> Vec<Perm> {
    permutations_of(&identity(n))
}

/// `U_g = {1, 3, …, 2g+1}`.
pub fn u_set(g: usize) -> Vec<usize> {
    (0..=g).map(|k| 2 * k + 1).collect()
}

/// `U′_g = {2, 4, …, 2g+2}`.
pub fn u_prime_set(g: usize) -> Vec<usize> {
    (1..=g + 1).map(|k| 2 * k).collect()
}

/// `i ↦ i + (−1)^{i+1}`: swaps `2k−1 ↔ 2k`.
pub fn parity_swap(n: usize) -> Perm {
    (1..=n)
        .map(|i| if i % 2 == 1 { i + 1 } else { i - 1 })
        .collect()
}

/// Generators of `S_U` on `2g+2` points: adjacent odd transpositions,
/// adjacent even transpositions and the parity swap.
pub fn s_u_generators(g: usize) -> Vec<Perm> {
    let n = 2 * g + 2;
    let mut gens = Vec::new();
    for k in 0..g {
        gens.push(transposition(n, 2 * k + 1, 2 * k + 3));
    }
    for k in 0..g {
        gens.push(transposition(n, 2 * k + 2, 2 * k + 4));
    }
    gens.push(parity_swap(n));
    gens
}

/// Generators of the subgroup `S̃_U` fixing `U` setwise.
pub fn s_u_tilde_generators(g: usize) -> Vec<Perm> {
    let mut gens = s_u_generators(g);
    gens.pop();
    gens
}

/// Every element of `S̃_U`: independent permutations of odd and of even
/// positions.
pub fn s_u_tilde_elements(g: usize) -> Vec<Perm> {
    let n = 2 * g + 2;
    let odds = permutations_of(&u_set(g));
    let evens = permutations_of(&u_prime_set(g));
    let mut out = Vec::with_capacity(odds.len() * evens.len());
    for po in &odds {
        for pe in &evens {
            let mut s = vec![0; n];
            for k in 0..=g {
                s[2 * k] = po[k];
                s[2 * k + 1] = pe[k];
            }
            out.push(s);
        }
    }
    out
}

/// Every element of `S_U`, of order `2((g+1)!)²`.
pub fn s_u_elements(g: usize) -> Vec<Perm> {
    let tilde = s_u_tilde_elements(g);
    let swap = parity_swap(2 * g + 2);
    let mut out = tilde.clone();
    out.extend(tilde.iter().map(|s| compose(s, &swap)));
    out
}

/// All `(g+1)`-subsets of `{1..n}` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// The permutation sending `U` to `a` and `U′` to the complement of `a`,
/// each order-preservingly.
fn halving_rep(g: usize, a: &[usize]) -> Perm {
    let n = 2 * g + 2;
    let b: Vec<usize> = (1..=n).filter(|x| !a.contains(x)).collect();
    let mut s = vec![0; n];
    for k in 0..=g {
        s[2 * k] = a[k];
        s[2 * k + 1] = b[k];
    }
    s
}

/// Left coset representatives of `S̃_U` in `S_{2g+2}`, one per ordered
/// halving: `C(2g+2, g+1)` of them.
pub fn s_u_tilde_coset_reps(g: usize) -> Vec<Perm> {
    subsets_of_size(2 * g + 2, g + 1)
        .iter()
        .map(|a| halving_rep(g, a))
        .collect()
}

/// Left coset representatives of `S_U` in `S_{2g+2}`, one per unordered
/// halving: `C(2g+2, g+1)/2` of them.
pub fn s_u_coset_reps(g: usize) -> Vec<Perm> {
    subsets_of_size(2 * g + 2, g + 1)
        .iter()
        .filter(|a| a.contains(&1))
        .map(|a| halving_rep(g, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn composition_and_inverse() {
        let s = vec![2, 3, 1];
        let t = vec![1, 3, 2];
        assert_eq!(compose(&s, &t), vec![2, 1, 3]);
        assert_eq!(compose(&s, &inverse(&s)), identity(3));
        assert_eq!(sign(&s), 1);
        assert_eq!(sign(&t), -1);
    }

    #[test]
    fn group_orders() {
        assert_eq!(all_permutations(4).len(), 24);
        for g in 1..=3 {
            let f = (1..=g + 1).product::<usize>();
            let su = s_u_elements(g);
            assert_eq!(su.len(), 2 * f * f);
            let distinct: HashSet<_> = su.iter().collect();
            assert_eq!(distinct.len(), su.len());
        }
        assert_eq!(s_u_coset_reps(2).len(), 10);
        assert_eq!(s_u_coset_reps(3).len(), 35);
        assert_eq!(s_u_tilde_coset_reps(2).len(), 20);
    }

    #[test]
    fn cosets_cover_symmetric_group() {
        let g = 2;
        let su = s_u_elements(g);
        let mut all = HashSet::new();
        for rep in s_u_coset_reps(g) {
            for s in &su {
                all.insert(compose(&rep, s));
            }
        }
        assert_eq!(all.len(), 720);
    }

    #[test]
    fn generators_close_to_s_u() {
        let g = 2;
        let gens = s_u_generators(g);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut frontier = vec![identity(2 * g + 2)];
        seen.insert(identity(2 * g + 2));
        while let Some(p) = frontier.pop() {
            for s in &gens {
                let q = compose(s, &p);
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        let expect: HashSet<Perm> = s_u_elements(g).into_iter().collect();
        assert_eq!(seen, expect);
    }
}
