from genusonedivisors.cli import main

raise SystemExit(main())
