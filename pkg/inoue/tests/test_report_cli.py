# Licensed under a 3-clause BSD style license - see LICENSE.rst
import json

import pytest

from inoue import cli
from inoue.affine_group import type2_generators, verify_relations, verify_tau_conjugation
from inoue.centralizer import positive_centralizer_generator
from inoue.conjugacy import similarity_classes
from inoue.errors import InvariantError
from inoue.exact_arith import QuadElem
from inoue.intmat import IMat
from inoue.moduli_core import classify
from inoue.report import emit, emit_batch, parse_machine, report_value
from inoue.version import schema_version


class TestReport:
    def test_machine_format(self):
        text = emit(classify(3, 1, 'plus'), 'machine')
        assert '"deformation_classes": "1"' in text
        assert text.endswith('\n')
        doc = json.loads(text)
        assert doc['schema_version'] == schema_version
        assert doc['report'] == 'typeII'
        assert doc['alpha'] == {'d': '5', 'a_num': '3', 'a_den': '2',
                                'b_num': '1', 'b_den': '2'}

    def test_deterministic(self):
        assert emit(classify(4, 2, 'plus'), 'machine') == emit(classify(4, 2, 'plus'),
                                                               'machine')

    @pytest.mark.parametrize('theta, r, kind', [(3, 1, 'plus'), (4, 2, 'plus'),
                                                (5, 3, 'plus'), (2, 2, 'minus')])
    def test_round_trip(self, theta, r, kind):
        report = classify(theta, r, kind)
        value = parse_machine(emit(report, 'machine'))
        assert value == report_value(report)
        assert value['alpha'] == report.alpha.alpha
        assert isinstance(value['classes'][0]['orbits'][0]['c'][0], QuadElem)

    def test_round_trip_relations(self):
        report = verify_relations(type2_generators(4, 2, (1, 0)))
        value = parse_machine(emit(report, 'machine'))
        assert value['ok'] is True
        assert value['p'] == [1, 0]
        assert value == report_value(report)

    def test_bad_schema(self):
        text = json.dumps({'schema_version': '0', 'report': 'typeII'})
        with pytest.raises(ValueError, match='schema_version'):
            parse_machine(text)

    def test_text(self):
        text = emit(classify(3, 1, 'plus'))
        lines = text.splitlines()
        assert lines[0] == 'Inoue surfaces of type II: theta = 3, r = 1'
        assert 'deformation classes: 1' in lines
        assert '  C  ' in text
        orbit, = report_value(classify(3, 1, 'plus'))['classes'][0]['orbits']
        assert orbit['component'] == 'C'

    def test_text_type3(self):
        text = emit(classify(2, 2, 'minus'), list_orbits=True)
        assert text.startswith('Inoue surfaces of type III: theta = 2, r = 2')
        assert 'biholomorphism classes: 2' in text
        assert 'members:' in text
        assert 'Cstar' not in text

    def test_other_reports(self):
        gen = positive_centralizer_generator(IMat([[2, 1], [1, 1]]))
        text = emit(gen, matrix=IMat([[2, 1], [1, 1]]))
        assert 'generator K: [[1, 1], [1, 0]]' in text
        assert 'K^2 = N' in text
        text = emit(similarity_classes(5, 1))
        assert 'count: 1' in text
        assert '[[1, 3], [1, 4]]' in text
        tau = verify_tau_conjugation(type2_generators(3, 1), (1, 0), 1, (0, 1))
        assert emit(tau).startswith('Conjugation criterion: consistent')
        value = report_value([], trace=3, det=1)
        assert value['count'] == 0

    def test_batch(self):
        reports = [classify(3, 1, 'plus'), classify(4, 2, 'plus')]
        value = parse_machine(emit_batch(reports, 'machine'))
        assert value['report'] == 'batch'
        assert [doc['deformation_classes'] for doc in value['reports']] == [1, 2]
        text = emit_batch(reports)
        assert text.count('Inoue surfaces of type II') == 2

    def test_errors(self):
        with pytest.raises(ValueError, match='format'):
            emit(classify(3, 1, 'plus'), 'json')
        with pytest.raises(TypeError):
            report_value(object())


class TestCLI:
    def run(self, capsys, *args):
        status = cli.main(list(args))
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    def test_type2(self, capsys):
        status, out, _ = self.run(capsys, 'type2', '--theta', '3', '--r', '1')
        assert status == 0
        assert 'deformation classes: 1' in out

    def test_type2_machine(self, capsys):
        status, out, _ = self.run(capsys, 'type2', '--theta', '4', '--r', '2',
                                  '--format', 'machine')
        assert status == 0
        assert parse_machine(out)['deformation_classes'] == 2

    def test_batch(self, capsys):
        status, out, _ = self.run(capsys, 'type2', '--theta', '3', '--theta', '4',
                                  '--r', '1', '--r', '2', '--format', 'machine')
        assert status == 0
        value = parse_machine(out)
        assert [(doc['theta'], doc['r']) for doc in value['reports']] == [
            (3, 1), (3, 2), (4, 1), (4, 2)]

    def test_type3(self, capsys):
        status, out, _ = self.run(capsys, 'type3', '--theta', '1', '--r', '1')
        assert status == 0
        assert 'biholomorphism classes: 1' in out

    def test_classes(self, capsys):
        status, out, _ = self.run(capsys, 'classes', '--theta', '2', '--det', '-1',
                                  '--format', 'machine')
        assert status == 0
        value = parse_machine(out)
        assert value['count'] == 1
        assert value['classes'][0]['representative'] == [[0, 1], [1, 2]]

    def test_centralizer(self, capsys):
        status, out, _ = self.run(capsys, 'centralizer', '--matrix', '2,1,1,1',
                                  '--format', 'machine')
        assert status == 0
        value = parse_machine(out)
        assert value['K'] == [[1, 1], [1, 0]]
        assert value['det'] == -1
        assert value['power_to_N'] == 2

    @pytest.mark.parametrize('args', [
        ('verify', '--type', 'II', '--theta', '4', '--r', '2', '--p', '1,0', '--t', '1/3'),
        ('verify', '--type', 'III', '--theta', '2', '--r', '2', '--p', '1,0'),
        ('verify', '--type', 'III', '--theta', '2', '--r', '2', '--tau', '1,0,1,0,1'),
        ('verify', '--type', 'I', '--theta2', '2', '--theta1', '-2')])
    def test_verify(self, capsys, args):
        status, out, _ = self.run(capsys, *args)
        assert status == 0
        assert 'FAIL' not in out and 'INCONSISTENT' not in out

    def test_type1(self, capsys):
        status, out, _ = self.run(capsys, 'type1', '--theta2', '2', '--theta1', '-2',
                                  '--bound', '2', '--format', 'machine')
        assert status == 0
        value = parse_machine(out)
        assert value['biholomorphism_classes'] == 2
        assert value['norm_bound'] == 2

    def test_type1_text(self, capsys):
        status, out, _ = self.run(capsys, 'type1', '--theta2', '3', '--theta1', '-1',
                                  '--bound', '2')
        assert status == 0
        assert out.splitlines()[0].endswith('P(X) = X^3 - 3X^2 - 1X - 1')
        assert '+ -' not in out

    @pytest.mark.parametrize('args', [
        ('type2', '--theta', '2', '--r', '1'),
        ('type3', '--theta', '0', '--r', '1'),
        ('type2', '--theta', '3', '--r', '0'),
        ('type1', '--theta2', '0', '--theta1', '0'),
        ('type1', '--theta2', '2', '--theta1', '-2', '--bound', '0'),
        ('centralizer', '--matrix', '1,0,0,1')])
    def test_inadmissible(self, capsys, args):
        status, out, err = self.run(capsys, *args)
        assert status == 3
        assert out == ''
        assert err.startswith('inoue: error:')

    @pytest.mark.parametrize('args', [
        (),
        ('type2', '--theta', '3'),
        ('type2', '--theta', 'x', '--r', '1'),
        ('type2', '--theta', '3', '--r', '1', '--jobs', '0'),
        ('centralizer', '--matrix', '1,2,3'),
        ('verify', '--type', 'I', '--theta2', '2'),
        ('verify', '--type', 'I', '--theta2', '2', '--theta1', '-2', '--tau', '0,0,0,0,0'),
        ('verify', '--type', 'II', '--theta', '3')])
    def test_usage(self, capsys, args):
        status, _, err = self.run(capsys, *args)
        assert status == 2
        assert 'usage:' in err

    def test_internal_failure(self, capsys, monkeypatch):
        def broken(*args):
            raise InvariantError("orbits do not partition")

        monkeypatch.setattr(cli, 'classify', broken)
        status, _, err = self.run(capsys, 'type2', '--theta', '3', '--r', '1')
        assert status == 4
        assert 'orbits do not partition' in err
