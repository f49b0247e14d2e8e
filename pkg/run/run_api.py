import logging

from flask import Flask
from flask_cors import CORS
from flask_restful import Api

from api.demo_resource import DemoResource
from api.demos_resource import DemosResource
from api.job_resource import JobResource
from api.jobs_resource import JobsResource
from hochschild.constants import Constants


class HochschildAPI:

    def __init__(self):
        self.app = Flask(__name__)
        self.api = Api(self.app)
        CORS(self.app, resources={r"/api/*": {"origins": "*"}})
        self._add_resources()

    def _add_resources(self):
        self.api.add_resource(JobsResource, '/api/jobs')
        self.api.add_resource(JobResource, '/api/job')
        self.api.add_resource(DemosResource, '/api/demos')
        self.api.add_resource(DemoResource, '/api/demo')

    def run(self):
        self.app.run(host=Constants.API_HOST, port=Constants.API_PORT)


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    HochschildAPI().run()
