use super::*;
use crate::canon::{canon_cover, canon_graph, canon_poset, canon_xy};
use crate::classify::balance_split;
use crate::error::DomainError;

fn cover(n: usize, sets: &[&[usize]]) -> SetCover {
    SetCover::new(n, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
}

fn poset(n0: usize, n1: usize, pairs: &[(usize, usize)]) -> BipartitePoset {
    BipartitePoset::from_pairs(n0, n1, pairs).unwrap()
}

fn gkey(g: &Graph) -> CanonicalKey {
    canon_graph(g).key
}

#[test]
fn split_and_cover() {
    let p3 = split_to_cover(&Graph::path(3)).unwrap();
    assert_eq!(
        p3.report.output_key,
        canon_cover(&cover(3, &[&[0, 1], &[1, 2]]))
    );
    let k1 = split_to_cover(&Graph::complete(1)).unwrap();
    assert_eq!(k1.output, cover(1, &[&[0]]));
    let p4 = split_to_cover(&Graph::path(4)).unwrap();
    assert_eq!(
        p4.report.output_key,
        canon_cover(&cover(4, &[&[0, 1], &[2, 3]]))
    );

    let back = cover_to_split(&cover(3, &[&[0, 1], &[1, 2]])).unwrap();
    assert_eq!(back.report.output_key, gkey(&Graph::path(3)));
    assert_eq!(
        cover_to_split(&cover(1, &[&[0]])).unwrap().output,
        Graph::complete(1)
    );
}

#[test]
fn split_and_xy() {
    let m = split_to_xy(&Graph::path(4)).unwrap();
    assert_eq!(
        m.report.output_key,
        canon_xy(&XYGraph::from_edges(2, 2, &[(0, 0), (1, 1)]))
    );
    let k1 = split_to_xy(&Graph::complete(1)).unwrap().output;
    assert_eq!((k1.nx(), k1.ny()), (1, 0));
    let star = split_to_xy(&Graph::star(3)).unwrap();
    assert_eq!(star.report.output_key, canon_xy(&XYGraph::complete(3, 1)));
    let back = xy_to_split(&star.output).unwrap();
    assert_eq!(back.report.output_key, gkey(&Graph::star(3)));
    assert_eq!(
        xy_to_split(&XYGraph::empty(1, 1)).unwrap_err(),
        DomainError::YIsolate(0).into()
    );
}

#[test]
fn split_and_poset() {
    let v = split_to_poset(&Graph::path(3)).unwrap();
    assert_eq!(
        v.report.output_key,
        canon_poset(&poset(2, 1, &[(0, 0), (1, 0)]))
    );
    let a = split_to_poset(&Graph::empty(3)).unwrap().output;
    assert_eq!((a.n0(), a.n1()), (3, 0));
    assert_eq!(
        poset_to_split(&v.output).unwrap().report.output_key,
        gkey(&Graph::path(3))
    );
}

#[test]
fn shift() {
    let p3 = xy_to_unbalanced_split(&XYGraph::complete(1, 1)).unwrap();
    assert_eq!(p3.report.output_key, gkey(&Graph::path(3)));
    let e2 = xy_to_unbalanced_split(&XYGraph::empty(1, 0)).unwrap();
    assert_eq!(e2.output, Graph::empty(2));
    for g in [
        Graph::path(3),
        Graph::empty(2),
        Graph::complete(4),
        Graph::star(3),
    ] {
        let back = unbalanced_split_to_xy(&g).unwrap();
        let again = xy_to_unbalanced_split(&back.output).unwrap();
        assert_eq!(again.report.output_key, gkey(&g));
    }
    assert_eq!(
        unbalanced_split_to_xy(&Graph::path(4)).unwrap_err(),
        DomainError::Balanced("swing vertex").into()
    );
}

#[test]
fn cover_and_poset() {
    let v = cover_to_poset(&cover(3, &[&[0, 1], &[1, 2]])).unwrap();
    assert_eq!(
        v.report.output_key,
        canon_poset(&poset(2, 1, &[(0, 0), (1, 0)]))
    );
    let a = cover_to_poset(&cover(1, &[&[0]])).unwrap().output;
    assert_eq!((a.n0(), a.n1()), (1, 0));
    let back = poset_to_cover(&v.output).unwrap();
    assert_eq!(
        back.report.output_key,
        canon_cover(&cover(3, &[&[0, 1], &[1, 2]]))
    );
    let not_min = SetCover::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
    assert_eq!(
        cover_to_poset(&not_min).unwrap_err(),
        DomainError::NotMinimal(0).into()
    );
}

#[test]
fn xy_and_cover() {
    let m = xy_to_cover(&XYGraph::from_edges(2, 2, &[(0, 0), (1, 1)])).unwrap();
    assert_eq!(
        m.report.output_key,
        canon_cover(&cover(4, &[&[0, 1], &[2, 3]]))
    );
    assert_eq!(
        xy_to_cover(&XYGraph::complete(1, 2)).unwrap().output,
        cover(3, &[&[0, 1, 2]])
    );
    assert_eq!(
        xy_to_cover(&XYGraph::empty(1, 0)).unwrap().output,
        cover(1, &[&[0]])
    );
    let back = cover_to_xy(&m.output).unwrap();
    assert_eq!(
        back.report.output_key,
        canon_xy(&XYGraph::from_edges(2, 2, &[(0, 0), (1, 1)]))
    );
}

#[test]
fn xy_and_poset() {
    let chain = xy_to_poset(&XYGraph::complete(1, 1)).unwrap();
    assert_eq!(
        chain.report.output_key,
        canon_poset(&poset(1, 1, &[(0, 0)]))
    );
    let two = xy_to_poset(&XYGraph::from_edges(2, 2, &[(0, 0), (1, 1)])).unwrap();
    assert_eq!(
        two.report.output_key,
        canon_poset(&poset(2, 2, &[(0, 0), (1, 1)]))
    );
    let v = xy_to_poset(&XYGraph::complete(2, 1)).unwrap();
    assert_eq!(
        v.report.output_key,
        canon_poset(&poset(2, 1, &[(0, 0), (1, 0)]))
    );
    assert_eq!(
        poset_to_xy(&v.output).unwrap().output,
        XYGraph::complete(2, 1)
    );
}

#[test]
fn compile_split() {
    let down = compile_split_down(&Graph::star(3)).unwrap();
    assert_eq!(down.report.output_key, gkey(&Graph::path(3)));
    assert_eq!(
        compile_split_down(&Graph::complete(1)).unwrap().output,
        Graph::empty(0)
    );
    assert_eq!(
        compile_split_down(&Graph::path(4)).unwrap_err(),
        DomainError::Balanced("swing vertex").into()
    );
    let up = compile_split_up(&Graph::path(3), 4).unwrap();
    assert_eq!(up.report.output_key, gkey(&Graph::star(3)));
    assert!(!balance_split(&up.output).unwrap().is_balanced());
    assert_eq!(
        compile_split_up(&Graph::path(3), 3).unwrap_err(),
        DomainError::TooLarge { size: 3, n: 3 }.into()
    );
}

#[test]
fn compile_cover() {
    let down = compile_cover_down(&cover(4, &[&[0, 1, 2, 3]])).unwrap();
    assert_eq!(down.output, SetCover::new(0, vec![]).unwrap());
    let up = compile_cover_up(&cover(1, &[&[0]]), 2).unwrap();
    assert_eq!(up.output, cover(2, &[&[0], &[1]]));
    let balanced = cover(4, &[&[0, 1], &[2, 3]]);
    assert_eq!(
        compile_cover_down(&balanced).unwrap_err(),
        DomainError::Balanced("extremal set").into()
    );
}

#[test]
fn compile_xy() {
    let down = compile_xy_down(&XYGraph::complete(1, 2)).unwrap();
    assert_eq!(down.output, XYGraph::empty(0, 0));
    let up = compile_xy_up(&XYGraph::empty(0, 0), 3).unwrap();
    assert_eq!(up.output, XYGraph::complete(1, 2));
}

#[test]
fn compile_poset() {
    let chain = poset(1, 1, &[(0, 0)]);
    let down = compile_poset_down(&chain).unwrap();
    assert_eq!(down.output, BipartitePoset::antichain(1));
    let up = compile_poset_up(&BipartitePoset::antichain(1), 2).unwrap();
    assert_eq!(up.output, chain);
    assert_eq!(
        compile_poset_down(&BipartitePoset::antichain(4))
            .unwrap()
            .output,
        BipartitePoset::antichain(0)
    );
    assert_eq!(
        compile_poset_up(&BipartitePoset::antichain(0), 2)
            .unwrap()
            .output,
        BipartitePoset::antichain(2)
    );
    let balanced = poset(2, 2, &[(0, 0), (1, 1)]);
    assert!(compile_poset_down(&balanced).is_err());
}

#[test]
fn replay_reproduces_output() {
    // Star with three leaves: three admissible swing vertices.
    let mut pick_last = |_: ChoicePoint, k: usize| k - 1;
    struct F<'a>(&'a mut dyn FnMut(ChoicePoint, usize) -> usize);
    impl Chooser for F<'_> {
        fn choose(&mut self, p: ChoicePoint, k: usize) -> usize {
            (self.0)(p, k)
        }
    }
    let g = Graph::star(3);
    let first = compile_split_down_with(&g, &mut F(&mut pick_last)).unwrap();
    assert!(first
        .report
        .choices
        .iter()
        .any(|c| c.point == ChoicePoint::SwingVertex && c.admissible == 3));
    let again = compile_split_down_with(&g, &mut Replay::new(&first.report.choices)).unwrap();
    assert_eq!(again, first);
}

#[test]
fn dispatch_by_name() {
    for m in MapId::all() {
        assert_eq!(m.name().parse::<MapId>().unwrap(), m);
    }
    let out = MapId::SplitToCover
        .apply(&Object::Split(Graph::path(3)), 0, &mut LeastIndex)
        .unwrap();
    assert_eq!(out.output.class(), ClassTag::Cover);
    assert!(MapId::SplitToCover
        .apply(&Object::Xy(XYGraph::empty(0, 0)), 0, &mut LeastIndex)
        .is_err());
}
