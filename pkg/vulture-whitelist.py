_.error_on_external_run  # unused attribute (noxfile.py:22)
_.reuse_existing_virtualenvs  # unused attribute (noxfile.py:23)
_.stop_on_first_error  # unused attribute (noxfile.py:24)
test  # unused function (noxfile.py:43)
validate  # unused function (noxfile.py:58)
main  # unused function (src/vietorised/vietorised_cli.py:635)
