from flask_restful import Resource

from hochschild.jobs.demos import DEMOS, demo_names


class DemosResource(Resource):

    @staticmethod
    def get():
        """List the built-in examples with their specs."""
        return [dict(DEMOS[name], name=name) for name in demo_names()]
