#![allow(dead_code)]

use eac::heegaard::{Component, Crossing, HeegaardDiagram};
use eac::presentation::{enumerate_moves, Move, MovePolicy, MoveSet, Presentation};
use eac::words::{Letter, Sign, Word};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letter(rng: &mut impl Rng, n_gens: usize) -> Letter {
    let sign = if rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    };
    Letter::new(rng.gen_range(0..n_gens), sign)
}

/// Unreduced word; small alphabets make cancellations frequent.
pub fn random_word(rng: &mut impl Rng, n_gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| random_letter(rng, n_gens)).collect())
}

/// Balanced presentation with `1..=max_n` generators and total length at most `max_total`.
pub fn random_balanced(rng: &mut impl Rng, max_n: usize, max_total: usize) -> Presentation {
    let n = rng.gen_range(1..=max_n);
    let mut budget = rng.gen_range(0..=max_total);
    let relators = (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=budget.min(max_total / n + 2));
            budget -= len;
            Word::new((0..len).map(|_| random_letter(rng, n)).collect())
        })
        .collect();
    Presentation::new(n, relators)
}

/// A uniformly chosen applicable move, or `None` if nothing applies.
pub fn random_move(
    rng: &mut impl Rng,
    p: &Presentation,
    set: MoveSet,
    max_gens: usize,
    max_len: usize,
) -> Option<Move> {
    let mut policy = MovePolicy::new(set, max_gens, max_len);
    policy.insert_at_ends_only = false;
    enumerate_moves(p, &policy).choose(rng).cloned()
}

/// Diagram with up to two components, at most `max_curves` curves per side
/// overall and at most `max_crossings` crossings. Positions along each α curve
/// are shuffled so α words are independent of β traversal order.
pub fn random_diagram(
    rng: &mut impl Rng,
    max_curves: usize,
    max_crossings: usize,
) -> HeegaardDiagram {
    let n_comp = rng.gen_range(1..=2usize.min(max_curves));
    let mut counts: Vec<usize> = vec![1; n_comp];
    let mut spare = rng.gen_range(0..=max_curves - n_comp);
    while spare > 0 {
        let c = rng.gen_range(0..n_comp);
        counts[c] += 1;
        spare -= 1;
    }
    if rng.gen_bool(0.2) {
        counts.push(0);
    }
    let components: Vec<Component> = counts
        .iter()
        .map(|&k| Component {
            genus: k + rng.gen_range(0..2),
            alpha_count: k,
            beta_count: k,
        })
        .collect();
    let total: usize = counts.iter().sum();
    let mut budget = rng.gen_range(0..=max_crossings);
    let mut crossings = Vec::new();
    let mut offset = 0;
    for &k in &counts {
        for b in 0..k {
            let len = if budget == 0 {
                0
            } else {
                rng.gen_range(0..=budget.min(6))
            };
            budget -= len;
            for pos in 0..len {
                let sign = if rng.gen_bool(0.5) {
                    Sign::Pos
                } else {
                    Sign::Neg
                };
                crossings.push(Crossing {
                    beta: offset + b,
                    beta_pos: pos,
                    alpha: offset + rng.gen_range(0..k),
                    alpha_pos: 0,
                    sign,
                });
            }
        }
        offset += k;
    }
    for a in 0..total {
        let mut idx: Vec<usize> = (0..crossings.len())
            .filter(|&i| crossings[i].alpha == a)
            .collect();
        idx.shuffle(rng);
        for (pos, i) in idx.into_iter().enumerate() {
            crossings[i].alpha_pos = pos;
        }
    }
    HeegaardDiagram::new(components, crossings).expect("generated diagram is valid")
}

/// A presentation together with permutations satisfying its relators that
/// generate a group of the presented order.
pub struct PermGroup {
    pub name: String,
    pub presentation: Presentation,
    pub generators: Vec<Vec<usize>>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // apply p, then q
    p.iter().map(|&i| q[i]).collect()
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Order of the permutation group generated by `gens`, by closure.
pub fn closure_order(gens: &[Vec<usize>], degree: usize) -> usize {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for s in gens {
            let h = compose(&g, s);
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    seen.len()
}

/// Evaluates `w` on the permutation generators.
pub fn evaluate(w: &Word, gens: &[Vec<usize>], degree: usize) -> Vec<usize> {
    w.letters().iter().fold((0..degree).collect(), |acc, l| {
        let g = &gens[l.gen.0];
        match l.sign {
            Sign::Pos => compose(&acc, g),
            Sign::Neg => compose(&acc, &inverse(g)),
        }
    })
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for (k, &a) in points.iter().enumerate() {
        p[a] = points[(k + 1) % points.len()];
    }
    p
}

fn group(name: String, text: &str, generators: Vec<Vec<usize>>) -> PermGroup {
    PermGroup {
        name,
        presentation: Presentation::parse(text).expect("catalog presentations parse"),
        generators,
    }
}

/// Small groups (order at most 24) with standard presentations.
pub fn perm_groups() -> Vec<PermGroup> {
    let mut out = Vec::new();
    for n in [1usize, 2, 3, 5, 7, 12] {
        let pts: Vec<usize> = (0..n).collect();
        out.push(group(
            format!("Z{n}"),
            &format!("< a | a^{n} >"),
            vec![cycle(n, &pts)],
        ));
    }
    for n in 3usize..=12 {
        let rot = cycle(n, &(0..n).collect::<Vec<_>>());
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        out.push(group(
            format!("D{n}"),
            &format!("< r, s | r^{n}, s^2, s r s r >"),
            vec![rot, refl],
        ));
    }
    for (n, m) in [(2usize, 2usize), (2, 3), (3, 3), (2, 6), (4, 4)] {
        let a = cycle(n + m, &(0..n).collect::<Vec<_>>());
        let b = cycle(n + m, &(n..n + m).collect::<Vec<_>>());
        out.push(group(
            format!("Z{n}xZ{m}"),
            &format!("< a, b | a^{n}, b^{m}, a b a^-1 b^-1 >"),
            vec![a, b],
        ));
    }
    // Q8 acting on itself: elements (sign, unit) with units 1, i, j, k
    let mul = |(s1, u1): (usize, usize), (s2, u2): (usize, usize)| -> (usize, usize) {
        const TABLE: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (s, u) = TABLE[u1][u2];
        ((s1 + s2 + s) % 2, u)
    };
    let index = |(s, u): (usize, usize)| 4 * s + u;
    let right = |x: (usize, usize)| -> Vec<usize> {
        (0..8).map(|e| index(mul((e / 4, e % 4), x))).collect()
    };
    out.push(group(
        "Q8".into(),
        "< i, j | i^4, i i j^-1 j^-1, j^-1 i j i >",
        vec![right((0, 1)), right((0, 2))],
    ));
    out.push(group(
        "A4".into(),
        "< a, b | a^2, b^3, a b a b a b >",
        vec![
            compose(&cycle(4, &[0, 1]), &cycle(4, &[2, 3])),
            cycle(4, &[1, 2, 3]),
        ],
    ));
    out.push(group(
        "S4".into(),
        "< a, b | a^2, b^3, a b a b a b a b >",
        vec![cycle(4, &[0, 1]), cycle(4, &[1, 2, 3])],
    ));
    out
}

/// Runs every diagram/presentation commutation square once on `d` with random
/// parameters; returns a description of each mismatch.
pub fn square_mismatches(rng: &mut impl Rng, d: &HeegaardDiagram) -> Vec<String> {
    use eac::heegaard::{
        add_cylinder_handle, beta_handle_slide, change_start_point, presentation_of_alpha,
        presentation_of_beta, reverse_orientation, stabilization_slots, stabilize_diagram, Curve,
    };
    use eac::presentation::{apply_move, normalize};

    let mut bad = Vec::new();
    let p = presentation_of_alpha(d).expect("balanced");
    // raw equality is checked where the square holds on the nose
    let mut check = |name: &str, via_diagram: Presentation, via_moves: Presentation, raw: bool| {
        if normalize(&via_diagram) != normalize(&via_moves) || (raw && via_diagram != via_moves) {
            bad.push(format!("{name}: {via_diagram} vs {via_moves} from\n{d}"));
        }
    };
    let nb = d.n_betas();
    if nb > 0 {
        let b = rng.gen_range(0..nb);
        let k = rng.gen_range(0..6usize);
        let len = d.beta_word(b).len();
        let diag = presentation_of_alpha(&change_start_point(d, b, k as i64).unwrap()).unwrap();
        let moved = apply_move(
            &p,
            &Move::Rotate {
                r: b,
                k: if len == 0 { 0 } else { k % len },
            },
        )
        .unwrap();
        check("change_start_point/rotate", diag, moved, true);

        let diag = presentation_of_alpha(&reverse_orientation(d, Curve::Beta(b)).unwrap()).unwrap();
        check(
            "reverse_orientation/invert",
            diag,
            apply_move(&p, &Move::Invert { i: b }).unwrap(),
            true,
        );

        let a = rng.gen_range(0..d.n_alphas());
        let pb = presentation_of_beta(d).unwrap();
        let diag = presentation_of_beta(&reverse_orientation(d, Curve::Alpha(a)).unwrap()).unwrap();
        check(
            "reverse_orientation/invert (alpha side)",
            diag,
            apply_move(&pb, &Move::Invert { i: a }).unwrap(),
            true,
        );
    }

    // beta slides stay inside one component
    let pairs: Vec<(usize, usize)> = (0..nb)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && d.component_of_beta(i) == d.component_of_beta(j))
        .collect();
    if let Some(&(i, j)) = pairs.choose(rng) {
        let reversed = rng.gen_bool(0.5);
        let diag = presentation_of_alpha(&beta_handle_slide(d, i, j, reversed).unwrap()).unwrap();
        let mut q = p.clone();
        if reversed {
            q = apply_move(&q, &Move::Invert { i: j }).unwrap();
        }
        q = apply_move(&q, &Move::Compose { i, j }).unwrap();
        if reversed {
            q = apply_move(&q, &Move::Invert { i: j }).unwrap();
        }
        check("beta_handle_slide/compose", diag, q, true);
    }

    let comps = d.components().len();
    if comps > 0 {
        let c = rng.gen_range(0..comps);
        let (slot_a, slot_b) = stabilization_slots(d, c).unwrap();
        let diag = presentation_of_alpha(&stabilize_diagram(d, c).unwrap()).unwrap();
        let stabilized = apply_move(&p, &Move::Stabilize).unwrap();
        // new generator and relator are last after Stabilize; move them to the diagram's slots
        let n = p.n_generators();
        let perm: Vec<usize> = (0..=n)
            .map(|g| {
                if g == n {
                    slot_a
                } else if g >= slot_a {
                    g + 1
                } else {
                    g
                }
            })
            .collect();
        let renamed = stabilized.permute_generators(&perm);
        let mut rels = renamed.relators().to_vec();
        let last = rels.pop().unwrap();
        rels.insert(slot_b, last);
        let reordered = Presentation::new(n + 1, rels);
        check("stabilize_diagram/stabilize", diag, reordered, true);

        let diag = presentation_of_alpha(&add_cylinder_handle(d, c).unwrap()).unwrap();
        check("add_cylinder_handle/identity", diag, p.clone(), true);
    }
    bad
}
