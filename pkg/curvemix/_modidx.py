# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/curvemix',
                'doc_host': 'https://cj-mills.github.io',
                'git_url': 'https://github.com/cj-mills/curvemix',
                'lib_path': 'curvemix'},
  'syms': {
            'curvemix.cli.commands': { 'curvemix.cli.commands.cmd_enumerate': ('cli/commands.html#cmd_enumerate', 'curvemix/cli/commands.py'),
                 'curvemix.cli.commands.cmd_sample': ('cli/commands.html#cmd_sample', 'curvemix/cli/commands.py'),
                 'curvemix.cli.commands.cmd_matrix': ('cli/commands.html#cmd_matrix', 'curvemix/cli/commands.py'),
                 'curvemix.cli.commands.cmd_spectrum': ('cli/commands.html#cmd_spectrum', 'curvemix/cli/commands.py'),
                 'curvemix.cli.commands.cmd_mix': ('cli/commands.html#cmd_mix', 'curvemix/cli/commands.py'),
                 'curvemix.cli.commands.cmd_compare': ('cli/commands.html#cmd_compare', 'curvemix/cli/commands.py'),
                 'curvemix.cli.commands.cmd_verify': ('cli/commands.html#cmd_verify', 'curvemix/cli/commands.py'),
                 'curvemix.cli.commands.run_command': ('cli/commands.html#run_command', 'curvemix/cli/commands.py')},
            'curvemix.cli.config': { 'curvemix.cli.config.CliConfig': ('cli/config.html#cliconfig', 'curvemix/cli/config.py'),
                 'curvemix.cli.config.CliConfig.__post_init__': ('cli/config.html#cliconfig.__post_init__', 'curvemix/cli/config.py'),
                 'curvemix.cli.config.CliConfig.chain_spec': ('cli/config.html#cliconfig.chain_spec', 'curvemix/cli/config.py'),
                 'curvemix.cli.config.CliConfig.spec': ('cli/config.html#cliconfig.spec', 'curvemix/cli/config.py'),
                 'curvemix.cli.config.CliConfig.header': ('cli/config.html#cliconfig.header', 'curvemix/cli/config.py')},
            'curvemix.cli.scripts': { 'curvemix.cli.scripts.curvemix_enumerate': ('cli/scripts.html#curvemix_enumerate', 'curvemix/cli/scripts.py'),
                 'curvemix.cli.scripts.curvemix_sample': ('cli/scripts.html#curvemix_sample', 'curvemix/cli/scripts.py'),
                 'curvemix.cli.scripts.curvemix_matrix': ('cli/scripts.html#curvemix_matrix', 'curvemix/cli/scripts.py'),
                 'curvemix.cli.scripts.curvemix_spectrum': ('cli/scripts.html#curvemix_spectrum', 'curvemix/cli/scripts.py'),
                 'curvemix.cli.scripts.curvemix_compare': ('cli/scripts.html#curvemix_compare', 'curvemix/cli/scripts.py'),
                 'curvemix.cli.scripts.curvemix_mix': ('cli/scripts.html#curvemix_mix', 'curvemix/cli/scripts.py'),
                 'curvemix.cli.scripts.curvemix_verify': ('cli/scripts.html#curvemix_verify', 'curvemix/cli/scripts.py'),
                 'curvemix.cli.scripts.curvemix': ('cli/scripts.html#curvemix', 'curvemix/cli/scripts.py')},
            'curvemix.core.errors': { 'curvemix.core.errors.ExitCode': ('core/errors.html#exitcode', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.CurvemixError': ('core/errors.html#curvemixerror', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.InstanceError': ('core/errors.html#instanceerror', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.MarginMismatch': ('core/errors.html#marginmismatch', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.InfeasibleRow': ('core/errors.html#infeasiblerow', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.InfeasibleColumn': ('core/errors.html#infeasiblecolumn', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.ForbiddenOutOfRange': ('core/errors.html#forbiddenoutofrange', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.DuplicateForbidden': ('core/errors.html#duplicateforbidden', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.IndexOutOfRange': ('core/errors.html#indexoutofrange', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.SpecMismatch': ('core/errors.html#specmismatch', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.MoveError': ('core/errors.html#moveerror', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NotACheckerboard': ('core/errors.html#notacheckerboard', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.ForbiddenEntryTouched': ('core/errors.html#forbiddenentrytouched', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.BadTradeSet': ('core/errors.html#badtradeset', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.ChainError': ('core/errors.html#chainerror', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.AssumptionViolated': ('core/errors.html#assumptionviolated', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.KTooLarge': ('core/errors.html#ktoolarge', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.BadDelta': ('core/errors.html#baddelta', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.BadChainDescriptor': ('core/errors.html#badchaindescriptor', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.OverlappingPairs': ('core/errors.html#overlappingpairs', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.StateSpaceError': ('core/errors.html#statespaceerror', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.EmptyStateSpace': ('core/errors.html#emptystatespace', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.StateSpaceTooLarge': ('core/errors.html#statespacetoolarge', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NotIsomorphic': ('core/errors.html#notisomorphic', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.SpectralError': ('core/errors.html#spectralerror', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.ReconstructionMismatch': ('core/errors.html#reconstructionmismatch', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.BadPQ': ('core/errors.html#badpq', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NoConvergence': ('core/errors.html#noconvergence', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NotSymmetric': ('core/errors.html#notsymmetric', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NotReversible': ('core/errors.html#notreversible', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.CheckFailed': ('core/errors.html#checkfailed', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.ConditionFailed': ('core/errors.html#conditionfailed', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NegativeEigenvalue': ('core/errors.html#negativeeigenvalue', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NotRegular': ('core/errors.html#notregular', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.NegativeLazySpectrum': ('core/errors.html#negativelazyspectrum', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.InconsistentVerdict': ('core/errors.html#inconsistentverdict', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.BoundViolated': ('core/errors.html#boundviolated', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.Reducible': ('core/errors.html#reducible', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.PeriodicChain': ('core/errors.html#periodicchain', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.MixingError': ('core/errors.html#mixingerror', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.LengthMismatch': ('core/errors.html#lengthmismatch', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.HorizonExceeded': ('core/errors.html#horizonexceeded', 'curvemix/core/errors.py'),
                 'curvemix.core.errors.MonotonicityViolated': ('core/errors.html#monotonicityviolated', 'curvemix/core/errors.py')},
            'curvemix.core.margins': { 'curvemix.core.margins.column_bit': ('core/margins.html#column_bit', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec': ('core/margins.html#marginspec', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.__post_init__': ('core/margins.html#marginspec.__post_init__', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.m': ('core/margins.html#marginspec.m', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.n': ('core/margins.html#marginspec.n', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.r_max': ('core/margins.html#marginspec.r_max', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.rho_total': ('core/margins.html#marginspec.rho_total', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.full_mask': ('core/margins.html#marginspec.full_mask', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.forbidden_masks': ('core/margins.html#marginspec.forbidden_masks', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.allowed_masks': ('core/margins.html#marginspec.allowed_masks', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.is_forbidden': ('core/margins.html#marginspec.is_forbidden', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.is_square_regular': ('core/margins.html#marginspec.is_square_regular', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.MarginSpec.describe': ('core/margins.html#marginspec.describe', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.validate_instance': ('core/margins.html#validate_instance', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.make_instance': ('core/margins.html#make_instance', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.regular_instance': ('core/margins.html#regular_instance', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.instance_from_dict': ('core/margins.html#instance_from_dict', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.load_instance': ('core/margins.html#load_instance', 'curvemix/core/margins.py'),
                 'curvemix.core.margins.instance_to_dict': ('core/margins.html#instance_to_dict', 'curvemix/core/margins.py')},
            'curvemix.core.matrix': { 'curvemix.core.matrix.BinaryMatrix': ('core/matrix.html#binarymatrix', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.from_rows': ('core/matrix.html#binarymatrix.from_rows', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.m': ('core/matrix.html#binarymatrix.m', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.n': ('core/matrix.html#binarymatrix.n', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.entry': ('core/matrix.html#binarymatrix.entry', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.to_lists': ('core/matrix.html#binarymatrix.to_lists', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.row_sums': ('core/matrix.html#binarymatrix.row_sums', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.col_sums': ('core/matrix.html#binarymatrix.col_sums', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.violations': ('core/matrix.html#binarymatrix.violations', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.satisfies_spec': ('core/matrix.html#binarymatrix.satisfies_spec', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.check': ('core/matrix.html#binarymatrix.check', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.same_spec': ('core/matrix.html#binarymatrix.same_spec', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.replace_rows': ('core/matrix.html#binarymatrix.replace_rows', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.key': ('core/matrix.html#binarymatrix.key', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.BinaryMatrix.__str__': ('core/matrix.html#binarymatrix.__str__', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.key_width': ('core/matrix.html#key_width', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.canonical_key': ('core/matrix.html#canonical_key', 'curvemix/core/matrix.py'),
                 'curvemix.core.matrix.from_key': ('core/matrix.html#from_key', 'curvemix/core/matrix.py')},
            'curvemix.core.moves': { 'curvemix.core.moves.mask_columns': ('core/moves.html#mask_columns', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.columns_mask': ('core/moves.html#columns_mask', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.RowPairStats': ('core/moves.html#rowpairstats', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.RowPairStats.u': ('core/moves.html#rowpairstats.u', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.RowPairStats.l': ('core/moves.html#rowpairstats.l', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.RowPairStats.trade_mask': ('core/moves.html#rowpairstats.trade_mask', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.RowPairStats.trade_columns': ('core/moves.html#rowpairstats.trade_columns', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.row_pair_stats': ('core/moves.html#row_pair_stats', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.is_switch_adjacent': ('core/moves.html#is_switch_adjacent', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.apply_switch': ('core/moves.html#apply_switch', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.trade_by_mask': ('core/moves.html#trade_by_mask', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.apply_trade': ('core/moves.html#apply_trade', 'curvemix/core/moves.py'),
                 'curvemix.core.moves.trade_neighbors': ('core/moves.html#trade_neighbors', 'curvemix/core/moves.py')},
            'curvemix.mixing.bounds': { 'curvemix.mixing.bounds.MixingReport': ('mixing/bounds.html#mixingreport', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.MixingReport.lower_bound': ('mixing/bounds.html#mixingreport.lower_bound', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.MixingReport.upper_bound': ('mixing/bounds.html#mixingreport.upper_bound', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.MixingReport.lower_holds': ('mixing/bounds.html#mixingreport.lower_holds', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.MixingReport.upper_holds': ('mixing/bounds.html#mixingreport.upper_holds', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.MixingReport.passed': ('mixing/bounds.html#mixingreport.passed', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.MixingReport.to_dict': ('mixing/bounds.html#mixingreport.to_dict', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.MixingReport.to_csv': ('mixing/bounds.html#mixingreport.to_csv', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.default_horizon': ('mixing/bounds.html#default_horizon', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.mixing_time': ('mixing/bounds.html#mixing_time', 'curvemix/mixing/bounds.py'),
                 'curvemix.mixing.bounds.check_mixing_bounds': ('mixing/bounds.html#check_mixing_bounds', 'curvemix/mixing/bounds.py')},
            'curvemix.mixing.empirical': { 'curvemix.mixing.empirical.EmpiricalReport': ('mixing/empirical.html#empiricalreport', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.EmpiricalReport.frequencies': ('mixing/empirical.html#empiricalreport.frequencies', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.EmpiricalReport.to_dict': ('mixing/empirical.html#empiricalreport.to_dict', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.empirical_distribution': ('mixing/empirical.html#empirical_distribution', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.TransitionFrequencies': ('mixing/empirical.html#transitionfrequencies', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.TransitionFrequencies.visits': ('mixing/empirical.html#transitionfrequencies.visits', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.TransitionFrequencies.max_z': ('mixing/empirical.html#transitionfrequencies.max_z', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.TransitionFrequencies.within': ('mixing/empirical.html#transitionfrequencies.within', 'curvemix/mixing/empirical.py'),
                 'curvemix.mixing.empirical.transition_frequencies': ('mixing/empirical.html#transition_frequencies', 'curvemix/mixing/empirical.py')},
            'curvemix.mixing.evolution': { 'curvemix.mixing.evolution.as_float_matrix': ('mixing/evolution.html#as_float_matrix', 'curvemix/mixing/evolution.py'),
                 'curvemix.mixing.evolution.distribution_at': ('mixing/evolution.html#distribution_at', 'curvemix/mixing/evolution.py'),
                 'curvemix.mixing.evolution.exact_distribution_at': ('mixing/evolution.html#exact_distribution_at', 'curvemix/mixing/evolution.py'),
                 'curvemix.mixing.evolution.tv_distance': ('mixing/evolution.html#tv_distance', 'curvemix/mixing/evolution.py'),
                 'curvemix.mixing.evolution.worst_case_tv': ('mixing/evolution.html#worst_case_tv', 'curvemix/mixing/evolution.py'),
                 'curvemix.mixing.evolution.worst_case_tv_curve': ('mixing/evolution.html#worst_case_tv_curve', 'curvemix/mixing/evolution.py')},
            'curvemix.samplers.chains': { 'curvemix.samplers.chains.ChainKind': ('samplers/chains.html#chainkind', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec': ('samplers/chains.html#chainspec', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.__post_init__': ('samplers/chains.html#chainspec.__post_init__', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.is_switch': ('samplers/chains.html#chainspec.is_switch', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.gamma_for': ('samplers/chains.html#chainspec.gamma_for', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.check_for': ('samplers/chains.html#chainspec.check_for', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.lazy': ('samplers/chains.html#chainspec.lazy', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.base': ('samplers/chains.html#chainspec.base', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.describe': ('samplers/chains.html#chainspec.describe', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.ChainSpec.__str__': ('samplers/chains.html#chainspec.__str__', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.parse_rational': ('samplers/chains.html#parse_rational', 'curvemix/samplers/chains.py'),
                 'curvemix.samplers.chains.parse_chain': ('samplers/chains.html#parse_chain', 'curvemix/samplers/chains.py')},
            'curvemix.samplers.rng': { 'curvemix.samplers.rng.RngStream': ('samplers/rng.html#rngstream', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.__init__': ('samplers/rng.html#rngstream.__init__', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.__repr__': ('samplers/rng.html#rngstream.__repr__', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.spawn': ('samplers/rng.html#rngstream.spawn', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.below': ('samplers/rng.html#rngstream.below', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.random': ('samplers/rng.html#rngstream.random', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.bernoulli': ('samplers/rng.html#rngstream.bernoulli', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.pair': ('samplers/rng.html#rngstream.pair', 'curvemix/samplers/rng.py'),
                 'curvemix.samplers.rng.RngStream.sample': ('samplers/rng.html#rngstream.sample', 'curvemix/samplers/rng.py')},
            'curvemix.samplers.runner': { 'curvemix.samplers.runner.make_stepper': ('samplers/runner.html#make_stepper', 'curvemix/samplers/runner.py'),
                 'curvemix.samplers.runner.ChainRun': ('samplers/runner.html#chainrun', 'curvemix/samplers/runner.py'),
                 'curvemix.samplers.runner.run_chain': ('samplers/runner.html#run_chain', 'curvemix/samplers/runner.py'),
                 'curvemix.samplers.runner.sample_endpoints': ('samplers/runner.html#sample_endpoints', 'curvemix/samplers/runner.py')},
            'curvemix.samplers.steps': { 'curvemix.samplers.steps.step_gamma_switch': ('samplers/steps.html#step_gamma_switch', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.step_ktv_classic': ('samplers/steps.html#step_ktv_classic', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.AssumptionCheck': ('samplers/steps.html#assumptioncheck', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.check_gamma_assumption': ('samplers/steps.html#check_gamma_assumption', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.step_curveball': ('samplers/steps.html#step_curveball', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.sample_disjoint_pairs': ('samplers/steps.html#sample_disjoint_pairs', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.step_k_curveball': ('samplers/steps.html#step_k_curveball', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.EdgeSwitcher': ('samplers/steps.html#edgeswitcher', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.EdgeSwitcher.__init__': ('samplers/steps.html#edgeswitcher.__init__', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.EdgeSwitcher.matrix': ('samplers/steps.html#edgeswitcher.matrix', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.EdgeSwitcher.step': ('samplers/steps.html#edgeswitcher.step', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.step_edge_switch': ('samplers/steps.html#step_edge_switch', 'curvemix/samplers/steps.py'),
                 'curvemix.samplers.steps.step_lazy': ('samplers/steps.html#step_lazy', 'curvemix/samplers/steps.py')},
            'curvemix.spectral.comparison': { 'curvemix.spectral.comparison.holds': ('spectral/comparison.html#holds', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.Inequality': ('spectral/comparison.html#inequality', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.Inequality.passed': ('spectral/comparison.html#inequality.passed', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.Inequality.to_dict': ('spectral/comparison.html#inequality.to_dict', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.Inequality.__str__': ('spectral/comparison.html#inequality.__str__', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ComparisonReport': ('spectral/comparison.html#comparisonreport', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ComparisonReport.passed': ('spectral/comparison.html#comparisonreport.passed', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ComparisonReport.failures': ('spectral/comparison.html#comparisonreport.failures', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ComparisonReport.add': ('spectral/comparison.html#comparisonreport.add', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ComparisonReport.to_dict': ('spectral/comparison.html#comparisonreport.to_dict', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ComparisonReport.table': ('spectral/comparison.html#comparisonreport.table', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ComparisonReport.raise_if_failed': ('spectral/comparison.html#comparisonreport.raise_if_failed', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.block_eigenvalues': ('spectral/comparison.html#block_eigenvalues', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.check_heatbath_condition': ('spectral/comparison.html#check_heatbath_condition', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ktv_condition_cases': ('spectral/comparison.html#ktv_condition_cases', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.verify_relaxation_comparison': ('spectral/comparison.html#verify_relaxation_comparison', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.ktv_block_lower_bound': ('spectral/comparison.html#ktv_block_lower_bound', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.verify_ktv_nonneg': ('spectral/comparison.html#verify_ktv_nonneg', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.edge_delta': ('spectral/comparison.html#edge_delta', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.verify_edge_comparison': ('spectral/comparison.html#verify_edge_comparison', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.verify_regular_bounds': ('spectral/comparison.html#verify_regular_bounds', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.verify_k_curveball_bounds': ('spectral/comparison.html#verify_k_curveball_bounds', 'curvemix/spectral/comparison.py'),
                 'curvemix.spectral.comparison.component_spectra': ('spectral/comparison.html#component_spectra', 'curvemix/spectral/comparison.py')},
            'curvemix.spectral.decomposition': { 'curvemix.spectral.decomposition.SwitchBlock': ('spectral/decomposition.html#switchblock', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchBlock.u': ('spectral/decomposition.html#switchblock.u', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchBlock.l': ('spectral/decomposition.html#switchblock.l', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchBlock.holding': ('spectral/decomposition.html#switchblock.holding', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchBlock.is_stochastic': ('spectral/decomposition.html#switchblock.is_stochastic', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchBlock.closed_form_spectrum': ('spectral/decomposition.html#switchblock.closed_form_spectrum', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchBlock.to_float': ('spectral/decomposition.html#switchblock.to_float', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.switch_block': ('spectral/decomposition.html#switch_block', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchDecomposition': ('spectral/decomposition.html#switchdecomposition', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchDecomposition.exact': ('spectral/decomposition.html#switchdecomposition.exact', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchDecomposition.negative_blocks': ('spectral/decomposition.html#switchdecomposition.negative_blocks', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.SwitchDecomposition.all_blocks': ('spectral/decomposition.html#switchdecomposition.all_blocks', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.decompose_switch': ('spectral/decomposition.html#decompose_switch', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.switch_block_spectrum': ('spectral/decomposition.html#switch_block_spectrum', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.tensor_block_spectrum': ('spectral/decomposition.html#tensor_block_spectrum', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.tensor_block_matrix': ('spectral/decomposition.html#tensor_block_matrix', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.kappa_block': ('spectral/decomposition.html#kappa_block', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.KappaDecomposition': ('spectral/decomposition.html#kappadecomposition', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.KappaDecomposition.exact': ('spectral/decomposition.html#kappadecomposition.exact', 'curvemix/spectral/decomposition.py'),
                 'curvemix.spectral.decomposition.decompose_curveball_by_kappa': ('spectral/decomposition.html#decompose_curveball_by_kappa', 'curvemix/spectral/decomposition.py')},
            'curvemix.spectral.eigen': { 'curvemix.spectral.eigen.Spectrum': ('spectral/eigen.html#spectrum', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.N': ('spectral/eigen.html#spectrum.n', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.lambda_1': ('spectral/eigen.html#spectrum.lambda_1', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.lambda_min': ('spectral/eigen.html#spectrum.lambda_min', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.lambda_star': ('spectral/eigen.html#spectrum.lambda_star', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.gap': ('spectral/eigen.html#spectrum.gap', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.relaxation': ('spectral/eigen.html#spectrum.relaxation', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.relaxation_1': ('spectral/eigen.html#spectrum.relaxation_1', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.is_periodic': ('spectral/eigen.html#spectrum.is_periodic', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.is_reducible': ('spectral/eigen.html#spectrum.is_reducible', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.star_differs': ('spectral/eigen.html#spectrum.star_differs', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.Spectrum.to_dict': ('spectral/eigen.html#spectrum.to_dict', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.round_robin_schedule': ('spectral/eigen.html#round_robin_schedule', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.eigendecompose_symmetric': ('spectral/eigen.html#eigendecompose_symmetric', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.spectral_report': ('spectral/eigen.html#spectral_report', 'curvemix/spectral/eigen.py'),
                 'curvemix.spectral.eigen.psd_check': ('spectral/eigen.html#psd_check', 'curvemix/spectral/eigen.py')},
            'curvemix.spectral.johnson': { 'curvemix.spectral.johnson.JohnsonSpectrum': ('spectral/johnson.html#johnsonspectrum', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.JohnsonSpectrum.min_bound': ('spectral/johnson.html#johnsonspectrum.min_bound', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.JohnsonSpectrum.size': ('spectral/johnson.html#johnsonspectrum.size', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.JohnsonSpectrum.multiset': ('spectral/johnson.html#johnsonspectrum.multiset', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.JohnsonSpectrum.as_array': ('spectral/johnson.html#johnsonspectrum.as_array', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.johnson_spectrum': ('spectral/johnson.html#johnson_spectrum', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.johnson_min_bound': ('spectral/johnson.html#johnson_min_bound', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.johnson_graph': ('spectral/johnson.html#johnson_graph', 'curvemix/spectral/johnson.py'),
                 'curvemix.spectral.johnson.johnson_adjacency': ('spectral/johnson.html#johnson_adjacency', 'curvemix/spectral/johnson.py')},
            'curvemix.spectral.propositions': { 'curvemix.spectral.propositions.stationary_distribution': ('spectral/propositions.html#stationary_distribution', 'curvemix/spectral/propositions.py'),
                 'curvemix.spectral.propositions.random_reversible_chain': ('spectral/propositions.html#random_reversible_chain', 'curvemix/spectral/propositions.py'),
                 'curvemix.spectral.propositions.eigen_difference_check': ('spectral/propositions.html#eigen_difference_check', 'curvemix/spectral/propositions.py'),
                 'curvemix.spectral.propositions.lazy_relaxation_check': ('spectral/propositions.html#lazy_relaxation_check', 'curvemix/spectral/propositions.py'),
                 'curvemix.spectral.propositions.eigenvalue_dominance_check': ('spectral/propositions.html#eigenvalue_dominance_check', 'curvemix/spectral/propositions.py'),
                 'curvemix.spectral.propositions.dirichlet_form': ('spectral/propositions.html#dirichlet_form', 'curvemix/spectral/propositions.py'),
                 'curvemix.spectral.propositions.dirichlet_equivalence_check': ('spectral/propositions.html#dirichlet_equivalence_check', 'curvemix/spectral/propositions.py'),
                 'curvemix.spectral.propositions.dirichlet_gap_check': ('spectral/propositions.html#dirichlet_gap_check', 'curvemix/spectral/propositions.py')},
            'curvemix.spectral.transitions': { 'curvemix.spectral.transitions.zero_entries': ('spectral/transitions.html#zero_entries', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.identity_entries': ('spectral/transitions.html#identity_entries', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix': ('spectral/transitions.html#transitionmatrix', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.__post_init__': ('spectral/transitions.html#transitionmatrix.__post_init__', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.N': ('spectral/transitions.html#transitionmatrix.n', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.__getitem__': ('spectral/transitions.html#transitionmatrix.__getitem__', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.lazy': ('spectral/transitions.html#transitionmatrix.lazy', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.to_float': ('spectral/transitions.html#transitionmatrix.to_float', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.to_csv': ('spectral/transitions.html#transitionmatrix.to_csv', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.is_symmetric': ('spectral/transitions.html#transitionmatrix.is_symmetric', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.is_stochastic': ('spectral/transitions.html#transitionmatrix.is_stochastic', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.check': ('spectral/transitions.html#transitionmatrix.check', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.restrict': ('spectral/transitions.html#transitionmatrix.restrict', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.first_difference': ('spectral/transitions.html#transitionmatrix.first_difference', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.TransitionMatrix.__eq__': ('spectral/transitions.html#transitionmatrix.__eq__', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.switch_entries': ('spectral/transitions.html#switch_entries', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.build_transition': ('spectral/transitions.html#build_transition', 'curvemix/spectral/transitions.py'),
                 'curvemix.spectral.transitions.build_heat_bath': ('spectral/transitions.html#build_heat_bath', 'curvemix/spectral/transitions.py')},
            'curvemix.statespace.enumeration': { 'curvemix.statespace.enumeration.StateSpace': ('statespace/enumeration.html#statespace', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.from_states': ('statespace/enumeration.html#statespace.from_states', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.N': ('statespace/enumeration.html#statespace.n', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.pi': ('statespace/enumeration.html#statespace.pi', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.__len__': ('statespace/enumeration.html#statespace.__len__', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.__iter__': ('statespace/enumeration.html#statespace.__iter__', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.__getitem__': ('statespace/enumeration.html#statespace.__getitem__', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.index_of': ('statespace/enumeration.html#statespace.index_of', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.row_array': ('statespace/enumeration.html#statespace.row_array', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.StateSpace.uniform': ('statespace/enumeration.html#statespace.uniform', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.max_states_from_env': ('statespace/enumeration.html#max_states_from_env', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.iter_states': ('statespace/enumeration.html#iter_states', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.find_initial_state': ('statespace/enumeration.html#find_initial_state', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.enumerate_states': ('statespace/enumeration.html#enumerate_states', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.brute_force_states': ('statespace/enumeration.html#brute_force_states', 'curvemix/statespace/enumeration.py'),
                 'curvemix.statespace.enumeration.iter_marginals': ('statespace/enumeration.html#iter_marginals', 'curvemix/statespace/enumeration.py')},
            'curvemix.statespace.graph': { 'curvemix.statespace.graph.StateGraph': ('statespace/graph.html#stategraph', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.StateGraph.adjacency': ('statespace/graph.html#stategraph.adjacency', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.StateGraph.degrees': ('statespace/graph.html#stategraph.degrees', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.StateGraph.is_bipartite': ('statespace/graph.html#stategraph.is_bipartite', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.StateGraph.components': ('statespace/graph.html#stategraph.components', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.build_state_graph': ('statespace/graph.html#build_state_graph', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.JohnsonCheck': ('statespace/graph.html#johnsoncheck', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.check_johnson_isomorphism': ('statespace/graph.html#check_johnson_isomorphism', 'curvemix/statespace/graph.py'),
                 'curvemix.statespace.graph.check_irreducibility': ('statespace/graph.html#check_irreducibility', 'curvemix/statespace/graph.py')},
            'curvemix.statespace.neighborhoods': { 'curvemix.statespace.neighborhoods.Neighborhood': ('statespace/neighborhoods.html#neighborhood', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.Neighborhood.row_pair': ('statespace/neighborhoods.html#neighborhood.row_pair', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.Neighborhood.u': ('statespace/neighborhoods.html#neighborhood.u', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.Neighborhood.l': ('statespace/neighborhoods.html#neighborhood.l', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.Neighborhood.size': ('statespace/neighborhoods.html#neighborhood.size', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.Neighborhood.factor_sizes': ('statespace/neighborhoods.html#neighborhood.factor_sizes', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.Neighborhood.expected_size': ('statespace/neighborhoods.html#neighborhood.expected_size', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.binomial_neighborhood': ('statespace/neighborhoods.html#binomial_neighborhood', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.check_kappa': ('statespace/neighborhoods.html#check_kappa', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.kappa_partition': ('statespace/neighborhoods.html#kappa_partition', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.partition_by_rowpair': ('statespace/neighborhoods.html#partition_by_rowpair', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.all_rowpair_partitions': ('statespace/neighborhoods.html#all_rowpair_partitions', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.enumerate_kappas': ('statespace/neighborhoods.html#enumerate_kappas', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.count_kappas': ('statespace/neighborhoods.html#count_kappas', 'curvemix/statespace/neighborhoods.py'),
                 'curvemix.statespace.neighborhoods.check_neighborhood_uniqueness': ('statespace/neighborhoods.html#check_neighborhood_uniqueness', 'curvemix/statespace/neighborhoods.py')}}}
