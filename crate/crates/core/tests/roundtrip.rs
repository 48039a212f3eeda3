mod common;

use cfcut::cnf::CnfFormula;
use cfcut::format::{
    parse_classes, parse_cut, parse_graph, parse_instance, write_classes, write_cut, write_graph,
    write_instance,
};
use cfcut::generators::{
    gen_from_clean3sat_multigraph, gen_from_clean3sat_simple, gen_from_mis, gen_random,
    gen_random_clean3cnf, gen_uncutable, expand_to_simple, ConflictModel, ReductionCertificate,
};
use cfcut::{encode_symmetric, solve_bruteforce, Cut};
use common::random_mis;

#[test]
fn instances_survive_text_round_trip() {
    for seed in 0..50 {
        let model = if seed % 2 == 0 {
            ConflictModel::OneRegular
        } else {
            ConflictModel::Density(0.3)
        };
        let n = 5 + (seed as usize) % 8;
        let inst = gen_random(n, 2 * n - 2, model, seed).unwrap();
        let text = write_instance(&inst);
        assert_eq!(parse_instance(&text).unwrap(), inst);
        assert_eq!(parse_graph(&write_graph(inst.graph())).unwrap(), *inst.graph());
    }
}

#[test]
fn cuts_survive_text_round_trip() {
    assert_eq!(parse_cut(&write_cut(None)).unwrap(), None);
    for seed in 0..20 {
        let inst = gen_random(8, 12, ConflictModel::OneRegular, seed).unwrap();
        let cut = solve_bruteforce(&inst).unwrap();
        assert_eq!(parse_cut(&write_cut(cut.as_ref())).unwrap(), cut);
    }
    let cut = Cut::new([4, 0, 9]);
    assert_eq!(parse_cut(&write_cut(Some(&cut))).unwrap(), Some(cut));
}

#[test]
fn classes_survive_text_round_trip() {
    let classes = vec![vec![0, 3], vec![1], vec![2, 4, 5]];
    assert_eq!(parse_classes(&write_classes(&classes)).unwrap(), classes);
}

#[test]
fn encodings_survive_dimacs_round_trip() {
    for seed in 0..20 {
        let inst = gen_random(9, 14, ConflictModel::Density(0.2), seed).unwrap();
        let f = encode_symmetric(&inst);
        let back = CnfFormula::from_dimacs(&f.to_dimacs(&["comment".into()])).unwrap();
        assert_eq!(back, f);
    }
}

#[test]
fn certificates_survive_text_round_trip() {
    let mut certs = Vec::new();
    for seed in 0..10 {
        let f = gen_random_clean3cnf(2 + (seed as usize) % 4, seed).unwrap();
        certs.push(gen_from_clean3sat_multigraph(&f));
        certs.push(gen_from_clean3sat_simple(&f));
        certs.push(gen_from_mis(&random_mis(6, 3, 0.3, seed)));
    }
    certs.push(expand_to_simple(&gen_uncutable(4).unwrap()));
    for (inst, cert) in certs {
        cert.validate(&inst).unwrap();
        let back = ReductionCertificate::parse(&cert.to_text()).unwrap();
        assert_eq!(back, cert);
        back.validate(&inst).unwrap();
        let inst_back = parse_instance(&write_instance(&inst)).unwrap();
        assert_eq!(inst_back, inst);
    }
}
